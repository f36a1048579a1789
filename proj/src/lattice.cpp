#include "rdt/lattice.hpp"

#include <algorithm>

#include "rdt/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rdt {

namespace {

constexpr std::size_t kRankCap = 8;
constexpr long kBoxCap = 1000000;
constexpr double kVolumeCap = 5e7;

Rational quadratic_form(const QMatrix& G, const QVector& v) {
    Rational s;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i].is_zero()) continue;
        Rational row;
        for (std::size_t j = 0; j < v.dim(); ++j) row += G(i, j) * v[j];
        s += v[i] * row;
    }
    return s;
}

Rational pairing(const QMatrix& G, const QVector& x, const QVector& y) {
    Rational s;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.dim(); ++j) s += x[i] * G(i, j) * y[j];
    }
    return s;
}

QMatrix scale_to_integer(const QMatrix& M) {
    Integer l(1);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            l = lcm(l, M(i, j).den());
    QMatrix R(M.rows(), M.cols());
    Rational f((l));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) R(i, j) = M(i, j) * f;
    return R;
}

struct EnumHit {
    QVector x;  // coefficient vector, canonical sign
    Rational val;
};

// Depth-first scan of the coefficient box. While `leading` the coordinate
// range is [0, box] so exactly one of +-x is produced.
void enum_rec(const QMatrix& Q, const std::vector<long>& box, QVector& x, std::size_t level,
              bool leading, const Rational& bound, std::vector<EnumHit>& out) {
    const std::size_t k = box.size();
    if (level == k) {
        if (leading) return;  // zero vector
        Rational v = quadratic_form(Q, x);
        if (v <= bound) out.push_back({x, v});
        return;
    }
    const long lo = leading ? 0 : -box[level];
    for (long c = lo; c <= box[level]; ++c) {
        x[level] = Rational(c);
        enum_rec(Q, box, x, level + 1, leading && c == 0, bound, out);
    }
    x[level] = Rational(0);
}

// All nonzero integer coefficient vectors with x^T Q x <= bound, one per
// +-pair, sorted by (value, coefficients). Serial and parallel paths give
// identical results: partial outputs are merged in task order and sorted.
std::vector<EnumHit> enumerate_up_to(const QMatrix& Q, const Rational& bound, Exec exec) {
    const std::size_t k = Q.rows();
    std::vector<EnumHit> hits;
    if (k == 0 || bound.is_negative()) return hits;

    QMatrix Qinv = Q.inverse();
    std::vector<long> box(k);
    double volume = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        Integer b = isqrt_floor(bound * Qinv(i, i));
        if (!b.fits_slong_p() || b.get_si() > kBoxCap)
            throw ResourceError("enumeration box too large");
        box[i] = b.get_si();
        volume *= 2.0 * static_cast<double>(box[i]) + 1.0;
        if (volume > kVolumeCap) throw ResourceError("enumeration volume too large");
    }

    struct Node {
        QVector x;
        std::size_t level;
        bool leading;
    };
    std::vector<Node> tasks{{QVector(k), 0, true}};
    const bool par = use_parallel(exec);
    const std::size_t want = par ? 64 : 1;
    while (tasks.size() < want) {
        bool expandable = false;
        std::vector<Node> next;
        for (const auto& n : tasks) {
            if (n.level == k) {
                next.push_back(n);
                continue;
            }
            expandable = true;
            const long lo = n.leading ? 0 : -box[n.level];
            for (long c = lo; c <= box[n.level]; ++c) {
                Node child = n;
                child.x[n.level] = Rational(c);
                child.leading = n.leading && c == 0;
                ++child.level;
                next.push_back(child);
            }
        }
        tasks = std::move(next);
        if (!expandable) break;
    }

    std::vector<std::vector<EnumHit>> parts(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
    for (long long t = 0; t < static_cast<long long>(tasks.size()); ++t) {
        QVector x = tasks[t].x;
        enum_rec(Q, box, x, tasks[t].level, tasks[t].leading, bound, parts[t]);
    }
    for (auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
    std::sort(hits.begin(), hits.end(), [](const EnumHit& a, const EnumHit& b) {
        if (a.val != b.val) return a.val < b.val;
        return a.x < b.x;
    });
    return hits;
}

// Coefficient Gram matrix of a basis: (B^T G B).
QMatrix coeff_gram(const QMatrix& G, const QMatrix& B) {
    return B.transpose() * (G * B);
}

}  // namespace

std::string AbelianGroupStructure::str() const {
    if (trivial()) return "1";
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const auto& f : invariant_factors) {
        if (!s.empty()) s += " x ";
        s += "Z/" + f.get_str();
    }
    return s;
}

Lattice::Lattice(QMatrix gram, QMatrix basis) : gram_(std::move(gram)), basis_(std::move(basis)) {
    if (!gram_.is_square()) throw DimensionError("Gram matrix must be square");
    if (basis_.rows() != gram_.rows() && basis_.cols() > 0)
        throw DimensionError("basis/Gram dimension mismatch");
    if (basis_.cols() > gram_.rows()) throw DimensionError("more basis vectors than dimensions");
    if (basis_.rows() == 0 && basis_.cols() == 0) basis_ = QMatrix(gram_.rows(), 0);
    if (!is_positive_definite(gram_))
        throw DomainError("Gram matrix is not symmetric positive definite");
    if (basis_.rank() != basis_.cols()) throw DomainError("dependent lattice basis columns");
}

Rational Lattice::norm2(const QVector& v) const {
    if (v.dim() != ambient_dim()) throw DimensionError("vector/lattice dimension mismatch");
    return quadratic_form(gram_, v);
}

bool membership(const Lattice& L, const QVector& v) {
    if (v.dim() != L.ambient_dim()) throw DimensionError("membership: dimension mismatch");
    return integer_solve(L.basis(), v).has_value();
}

Lattice dual_lattice(const Lattice& L) {
    if (!L.full()) throw DomainError("dual lattice requires a full lattice");
    return Lattice(L.gram().inverse(), L.basis().inverse().transpose());
}

std::vector<QVector> shortest_vectors(const Lattice& L, Exec exec) {
    if (L.rank() > kRankCap) throw ResourceError("lattice rank above the desk-scale cap (8)");
    std::vector<QVector> out;
    if (L.rank() == 0) return out;
    QMatrix Q = coeff_gram(L.gram(), L.basis());
    Rational bound = Q(0, 0);
    for (std::size_t i = 1; i < Q.rows(); ++i) bound = std::min(bound, Q(i, i));
    auto hits = enumerate_up_to(Q, bound, exec);
    const Rational min = hits.front().val;
    for (const auto& h : hits) {
        if (h.val != min) break;
        QVector v = L.basis() * h.x;
        out.push_back(v);
        out.push_back(-v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<QVector> vectors_of_norm(const Lattice& L, const Rational& q, Exec exec) {
    if (L.rank() > kRankCap) throw ResourceError("lattice rank above the desk-scale cap (8)");
    std::vector<QVector> out;
    if (L.rank() == 0) return out;
    QMatrix Q = coeff_gram(L.gram(), L.basis());
    for (const auto& h : enumerate_up_to(Q, q, exec))
        if (h.val == q) out.push_back(L.basis() * h.x);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Basis columns of the sublattice {v in span(B) cap lattice : <u, v>_G = 0}.
QMatrix orthogonal_sublattice_basis(const QMatrix& G, const QMatrix& B, const QVector& u) {
    QMatrix cond(1, B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) cond(0, j) = pairing(G, u, B.col(j));
    QMatrix K = integer_kernel(scale_to_integer(cond));
    return B * K;
}

// Recursive orthogonal-basis construction: every shortest vector of a
// rectangular lattice is one of its orthogonal basis vectors up to sign,
// so the shortest layer can be consumed greedily. For a non-rectangular
// lattice this still yields orthogonal vectors; the index test afterwards
// is what decides.
void orthogonal_basis_rec(const QMatrix& G, const QMatrix& B, Exec exec,
                          std::vector<QVector>& out) {
    if (B.cols() == 0) return;
    QMatrix Q = coeff_gram(G, B);
    Rational bound = Q(0, 0);
    for (std::size_t i = 1; i < Q.rows(); ++i) bound = std::min(bound, Q(i, i));
    auto hits = enumerate_up_to(Q, bound, exec);
    const Rational min = hits.front().val;
    // Deterministic, basis-independent choice from the shortest layer:
    // map each +-pair to its lex-greater (positive-leaning) member and
    // take the lex-least of those.
    auto positive = [](QVector v) { return std::max(v, -v); };
    QVector pick = positive(B * hits.front().x);
    for (const auto& h : hits) {
        if (h.val != min) break;
        QVector v = positive(B * h.x);
        if (v < pick) pick = v;
    }
    out.push_back(pick);
    orthogonal_basis_rec(G, orthogonal_sublattice_basis(G, B, pick), exec, out);
}

}  // namespace

std::optional<OrthogonalBasis> orthogonal_basis(const Lattice& L, Exec exec) {
    if (L.rank() > kRankCap) throw ResourceError("lattice rank above the desk-scale cap (8)");
    std::vector<QVector> vecs;
    orthogonal_basis_rec(L.gram(), L.basis(), exec, vecs);

    // Index-1 test: the candidate vectors generate the whole lattice iff
    // their coordinate matrix w.r.t. the lattice basis is unimodular.
    QMatrix C(L.rank(), 0);
    for (const auto& v : vecs) {
        auto x = integer_solve(L.basis(), v);
        if (!x) return std::nullopt;
        C.push_col(*x);
    }
    Rational d = C.det();
    if (d != Rational(1) && d != Rational(-1)) return std::nullopt;

    OrthogonalBasis ob;
    std::sort(vecs.begin(), vecs.end(), [&](const QVector& a, const QVector& b) {
        Rational na = L.norm2(a), nb = L.norm2(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    ob.vectors = std::move(vecs);
    for (const auto& v : ob.vectors) ob.squared_lengths.push_back(L.norm2(v));
    ob.cubic = std::all_of(ob.squared_lengths.begin(), ob.squared_lengths.end(),
                           [&](const Rational& q) { return q == ob.squared_lengths.front(); });
    return ob;
}

AbelianGroupStructure quotient_group(const Lattice& L, const Lattice& S) {
    if (L.ambient_dim() != S.ambient_dim())
        throw DimensionError("quotient_group: ambient dimension mismatch");
    QMatrix C(L.rank(), 0);
    for (std::size_t j = 0; j < S.rank(); ++j) {
        auto x = integer_solve(L.basis(), S.basis().col(j));
        if (!x) throw DomainError("quotient_group: S is not a sublattice of L");
        C.push_col(*x);
    }
    AbelianGroupStructure g;
    g.free_rank = L.rank() - S.rank();
    if (S.rank() > 0) {
        for (const auto& f : smith_normal_form(C).invariant_factors())
            if (f > 1) g.invariant_factors.push_back(f);
    }
    return g;
}

Lattice intersect_with_subspace(const Lattice& L, const QMatrix& P) {
    if (P.rows() != L.ambient_dim()) throw DimensionError("subspace dimension mismatch");
    // v = Bx lies in span(P) iff y^T v = 0 for every y spanning the plain
    // orthogonal complement of span(P).
    QMatrix N = nullspace(P.transpose());
    QMatrix cond = N.transpose() * L.basis();
    QMatrix K = integer_kernel(scale_to_integer(cond));
    return Lattice(L.gram(), L.basis() * K);
}

bool splits_across(const Lattice& L, const std::vector<QMatrix>& subspaces) {
    if (!L.full()) throw DomainError("splits_across requires a full lattice");
    const std::size_t n = L.ambient_dim();
    QMatrix all(n, 0);
    for (const auto& P : subspaces) {
        if (P.rows() != n) throw DimensionError("subspace dimension mismatch");
        for (std::size_t j = 0; j < P.cols(); ++j) all.push_col(P.col(j));
    }
    if (all.rank() != n) throw DomainError("subspaces do not span the ambient space");
    for (std::size_t a = 0; a < subspaces.size(); ++a)
        for (std::size_t b = a + 1; b < subspaces.size(); ++b)
            for (std::size_t i = 0; i < subspaces[a].cols(); ++i)
                for (std::size_t j = 0; j < subspaces[b].cols(); ++j)
                    if (!pairing(L.gram(), subspaces[a].col(i), subspaces[b].col(j)).is_zero())
                        throw DomainError("subspaces are not pairwise orthogonal");

    // Index of sum of the intersection lattices inside L.
    QMatrix C(n, 0);
    for (const auto& P : subspaces) {
        Lattice Li = intersect_with_subspace(L, P);
        for (std::size_t j = 0; j < Li.rank(); ++j) {
            auto x = integer_solve(L.basis(), Li.basis().col(j));
            if (!x) throw Error("internal: intersection escaped the lattice");
            C.push_col(*x);
        }
    }
    auto factors = smith_normal_form(C).invariant_factors();
    if (factors.size() != n) return false;  // sum does not have full rank
    Integer idx(1);
    for (const auto& f : factors) idx *= f;
    return idx == 1;
}

Lattice lattice_from_generators(const QMatrix& gram, const std::vector<QVector>& gens) {
    const std::size_t n = gram.rows();
    QMatrix M(n, 0);
    for (const auto& g : gens) M.push_col(g);
    if (M.cols() == 0) return Lattice(gram, QMatrix(n, 0));

    Integer l(1);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) l = lcm(l, M(i, j).den());
    QMatrix Mi(n, M.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) Mi(i, j) = M(i, j) * Rational(l);

    // U * Mi * V = D => column span of Mi over Z is spanned by d_i * Uinv e_i.
    SNFResult s = smith_normal_form(Mi);
    QMatrix Uinv = s.U.inverse();
    QMatrix B(n, 0);
    for (std::size_t i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i) {
        if (s.D(i, i).is_zero()) continue;
        QVector v = Uinv.col(i);
        v *= s.D(i, i) / Rational(l);
        B.push_col(v);
    }
    return Lattice(gram, B);
}

}  // namespace rdt
