#pragma once

#include <optional>

#include "pk/forms.hpp"
#include "pk/linalg.hpp"

namespace pk {

// Finite-dimensional slice of the form/chain space: arity k, coefficients
// homogeneous of degree d. Enumeration is tuple-lex, then monomials in
// descending graded-lex order.
class GradedBasis {
  public:
    GradedBasis(RingPtr ring, int k, int d);

    int k() const { return k_; }
    int d() const { return d_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<std::pair<IndexTuple, Monomial>>& elems() const { return elems_; }
    int index_of(const IndexTuple& t, const Monomial& m) const;

  private:
    RingPtr ring_;
    int k_, d_;
    std::vector<std::pair<IndexTuple, Monomial>> elems_;
    std::map<std::pair<IndexTuple, std::vector<int>>, int> index_;
};

std::vector<Monomial> monomials_of_degree(int nvars, int d);       // descending graded-lex
std::vector<Monomial> monomials_up_to_degree(int nvars, int d);    // descending graded-lex
std::vector<IndexTuple> increasing_tuples(int n, int k);           // tuple-lex

struct DimRow {
    int k, d;
    int z, b, h;  // kernel, image from below, cohomology/homology
};

struct DimTable {
    bool truncated = false;
    std::vector<DimRow> rows;
    const DimRow* row(int k, int d) const;
};

// Common homogeneous degree of the bivector entries; 1 for the zero bivector
// (degree shift 0), nothing when the entries are inhomogeneous or of mixed
// degrees.
std::optional<int> bivector_degree(const PoissonStructure& P);

// Matrix of the CE differential from slice (k, d) to slice (k+1, d+r-1),
// columns indexed by the source basis.
QMatrix differential_matrix(const PoissonStructure& P, int k, int d);
// Matrix of the Koszul boundary from slice (k, d) to slice (k-1, d+r-1).
QMatrix koszul_matrix(const PoissonStructure& P, int k, int d);

DimTable cohomology_dims(const PoissonStructure& P, int kmax, int dmax);
DimTable homology_dims(const PoissonStructure& P, int kmax, int dmax);

// Degree-cutoff mode for inhomogeneous bivectors: sources are truncated to
// coefficient degree <= dmax, the differential itself is exact, and the
// image row counts dim(im n truncated kernel space). Labeled as truncated.
DimTable cohomology_dims_truncated(const PoissonStructure& P, int kmax, int dmax);

// Solves d eta = w with coefficient degree <= bound; the returned form is
// re-verified before it is handed back.
std::optional<KForm> solve_coboundary(const PoissonStructure& P, const KForm& w, int bound);

// Independent oracle: Chevalley-Eilenberg cohomology of the Lie algebra given
// by c with coefficients in the degree-d slices of its symmetric algebra,
// built directly from the structure constants without the forms module.
DimTable ce_lie_algebra_cohomology(const StructureConstants& c, int kmax, int dmax);

}  // namespace pk
