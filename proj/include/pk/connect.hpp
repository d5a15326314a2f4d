#pragma once

#include <optional>

#include "pk/forms.hpp"

namespace pk {

enum class ConnectionMode { real, imaginary };

// Connection on the free rank-one module: nabla_alpha(s) = sharp(alpha)(s)
// minus theta(alpha) s, with an extra factor i in imaginary mode.
struct RankOneConnection {
    KForm theta;  // arity 1
    ConnectionMode mode;

    RankOneConnection(KForm theta_, ConnectionMode mode_) : theta(std::move(theta_)), mode(mode_) {
        if (theta.arity() != 1) throw error("connection: theta must be a 1-form");
    }
    Scalar factor() const { return mode == ConnectionMode::real ? Scalar(1) : Scalar::i(); }
};

Polynomial connection_apply(const PoissonStructure& P, const RankOneConnection& conn,
                            const KForm& alpha, const Polynomial& s);

// Curvature read off from operator commutators on the basis section; the
// closed form -(mode factor) d theta is computed alongside and any mismatch
// is a hard failure.
KForm curvature(const PoissonStructure& P, const RankOneConnection& conn);

// d(curvature); identically zero in rank one.
KForm bianchi_defect(const PoissonStructure& P, const RankOneConnection& conn);

RankOneConnection tensor_connection(const RankOneConnection& a, const RankOneConnection& b);

// curvature(a) - curvature(b) = -(factor) d(theta_a - theta_b).
bool connection_difference_check(const PoissonStructure& P, const RankOneConnection& a,
                                 const RankOneConnection& b);

// Element of the extension A + D built on a candidate 2-cocycle.
struct ExtensionElement {
    Polynomial a;
    KForm alpha;  // arity 1
    bool is_zero() const { return a.is_zero() && alpha.is_zero(); }
};

ExtensionElement extension_bracket(const PoissonStructure& P, const KForm& pi2,
                                   const ExtensionElement& x, const ExtensionElement& y);

struct ExtensionDefect {
    bool zero;
    int i = -1, j = -1, k = -1;  // witness triple of basis 1-forms when nonzero
    std::optional<ExtensionElement> value;
};

// Jacobi sum of the bracket on A + D over all basis triples; vanishes
// exactly when pi2 is a 2-cocycle.
ExtensionDefect extension_jacobi_defect(const PoissonStructure& P, const KForm& pi2);

}  // namespace pk
