#include "pk/connect.hpp"

namespace pk {

Polynomial connection_apply(const PoissonStructure& P, const RankOneConnection& conn,
                            const KForm& alpha, const Polynomial& s) {
    if (alpha.arity() != 1) throw error("connection_apply: alpha must be a 1-form");
    return sharp(P, alpha)(s) - s * pair_one_forms(conn.theta, alpha).with_ring(s.ring()) * conn.factor();
}

KForm curvature(const PoissonStructure& P, const RankOneConnection& conn) {
    P.require_poisson("curvature");
    require_same_ring(P.ring(), conn.theta.ring(), "curvature");
    const RingPtr& ring = P.ring();
    const int n = ring->size();
    const Polynomial one = Polynomial::constant(ring, Scalar(1));

    KForm omega(ring, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            KForm ei = KForm::zero(ring, 1), ej = KForm::zero(ring, 1);
            ei.add({i}, one);
            ej.add({j}, one);
            Polynomial value = connection_apply(P, conn, ei, connection_apply(P, conn, ej, one)) -
                               connection_apply(P, conn, ej, connection_apply(P, conn, ei, one)) -
                               connection_apply(P, conn, bracket_one_forms_raw(P, ei, ej), one);
            omega.add_signed({i, j}, std::move(value));
        }

    KForm closed = ce_differential_raw(P, conn.theta).scaled(-conn.factor());
    if (omega != closed)
        throw std::logic_error("curvature: operator commutators disagree with -(factor) d theta");
    return omega;
}

KForm bianchi_defect(const PoissonStructure& P, const RankOneConnection& conn) {
    return ce_differential(P, curvature(P, conn));
}

RankOneConnection tensor_connection(const RankOneConnection& a, const RankOneConnection& b) {
    if (a.mode != b.mode) throw error("tensor_connection: connection modes differ");
    return RankOneConnection(a.theta + b.theta, a.mode);
}

bool connection_difference_check(const PoissonStructure& P, const RankOneConnection& a,
                                 const RankOneConnection& b) {
    if (a.mode != b.mode) throw error("connection_difference_check: connection modes differ");
    KForm lhs = curvature(P, a) - curvature(P, b);
    KForm rhs = ce_differential(P, a.theta - b.theta).scaled(-a.factor());
    return lhs == rhs;
}

ExtensionElement extension_bracket(const PoissonStructure& P, const KForm& pi2,
                                   const ExtensionElement& x, const ExtensionElement& y) {
    if (pi2.arity() != 2) throw error("extension_bracket: pi2 must be a 2-form");
    // [(a, alpha), (b, beta)] = (pi2(alpha, beta) + alpha#(b) - beta#(a), [alpha, beta])
    Polynomial a_part = evaluate(pi2, {x.alpha, y.alpha});
    a_part += sharp(P, x.alpha)(y.a) - sharp(P, y.alpha)(x.a);
    return {a_part, bracket_one_forms_raw(P, x.alpha, y.alpha)};
}

ExtensionDefect extension_jacobi_defect(const PoissonStructure& P, const KForm& pi2) {
    P.require_poisson("extension_jacobi_defect");
    require_same_ring(P.ring(), pi2.ring(), "extension_jacobi_defect");
    const RingPtr& ring = P.ring();
    const int n = ring->size();
    const Polynomial one = Polynomial::constant(ring, Scalar(1));
    auto basis = [&](int i) {
        KForm e = KForm::zero(ring, 1);
        e.add({i}, one);
        return ExtensionElement{Polynomial::zero(ring), e};
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                ExtensionElement x = basis(i), y = basis(j), z = basis(k);
                auto cyc = [&](const ExtensionElement& u, const ExtensionElement& v,
                               const ExtensionElement& w) {
                    return extension_bracket(P, pi2, extension_bracket(P, pi2, u, v), w);
                };
                ExtensionElement s1 = cyc(x, y, z), s2 = cyc(y, z, x), s3 = cyc(z, x, y);
                ExtensionElement sum{s1.a + s2.a + s3.a, s1.alpha + s2.alpha + s3.alpha};
                if (!sum.is_zero()) return {false, i, j, k, sum};
            }
    return {true};
}

}  // namespace pk
