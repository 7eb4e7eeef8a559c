#include "hnum/classify.hpp"

#include <set>

#include "hnum/number_field.hpp"

namespace hnum {

bool is_unit_one(const EigenKey& key) { return key.factor == RatPoly{-1, 1}; }

namespace {

FieldMatrix shifted_monodromy(const NumberField& K, const RatMatrix& h) {
    FieldMatrix N = FieldMatrix::from_rational(h);
    const RatPoly x = K.generator();
    for (std::size_t i = 0; i < h.rows(); ++i) N(i, i) = K.sub(N(i, i), x);
    return N;
}

FieldMatrix scale(const NumberField& K, FieldMatrix m, const RatPoly& c) {
    for (auto& e : m.data) e = K.mul(e, c);
    return m;
}

FieldMatrix transpose(const FieldMatrix& m) {
    FieldMatrix r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
    return r;
}

// Sign of i^e for even e.
int even_power_sign(int e) { return (e / 2) % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<EquivariantSignature> equivariant_signatures(const VariationStructure& v,
                                                        const std::vector<JordanClass>& jordan) {
    std::vector<EquivariantSignature> out;
    std::set<RatPoly> done;
    for (const auto& jc : jordan) {
        if (jc.cls.status != UnitCircleStatus::on) continue;
        const RatPoly& f = jc.cls.key.factor;
        if (!done.insert(f).second) continue;

        const NumberField K(f);
        const bool at_one = is_unit_one(jc.cls.key);
        const int kmax = jc.part.max_size();
        const std::size_t n = v.dim;
        const FieldMatrix N = shifted_monodromy(K, v.h);
        std::vector<FieldMatrix> Npow{FieldMatrix::from_rational(RatMatrix::identity(n))};
        for (int j = 1; j <= kmax; ++j) Npow.push_back(multiply(K, Npow.back(), N));
        std::vector<FieldMatrix> U{FieldMatrix(n, 0)};
        for (int j = 1; j <= kmax; ++j) U.push_back(kernel(K, Npow[static_cast<std::size_t>(j)]));
        const FieldMatrix form = FieldMatrix::from_rational(at_one ? v.S.transpose() : v.b);

        std::vector<const JordanClass*> roots;
        for (const auto& other : jordan)
            if (other.cls.key.factor == f && other.cls.status == UnitCircleStatus::on) roots.push_back(&other);

        for (int k = 1; k <= kmax; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            FieldMatrix C = extend_basis(K, U[ku - 1], U[ku]);
            if (C.cols == 0) continue;
            FieldMatrix Y = multiply(K, Npow[ku - 1], C);
            if (!at_one) Y = scale(K, Y, K.pow(K.generator(), 1 - k));
            // G[a][c] = B(C_a, Y_c) = Y_c^H form C_a
            FieldMatrix G = transpose(multiply(K, multiply(K, conj_transpose(K, Y), form), C));
            const int e = at_one ? k + 1 : k;
            const int s_k = jc.part.blocks(k);

            if (e % 2 == 1 && K.degree() == 1) {
                // Real field with an odd power of i: the form is skew, blocks come in +/- pairs.
                const std::size_t r = rank(K, G);
                if (static_cast<int>(r) != s_k || r % 2 != 0)
                    throw std::logic_error("skew form rank does not match the Jordan data");
                for (const auto* rc : roots)
                    out.push_back({rc->cls.key, k, rc->part.dimker[std::min(ku, rc->part.dimker.size() - 1)], 0,
                                   static_cast<int>(r), 0.0});
                continue;
            }
            int global_sign = 1;
            FieldMatrix H = G;
            if (e % 2 == 0) {
                global_sign = even_power_sign(e);
            } else {
                H = scale(K, G, K.omega());
                global_sign = even_power_sign(e - 1);
            }
            std::vector<RatPoly> diag = hermitian_diagonal(K, H);
            int nonzero = 0;
            for (const auto& d : diag)
                if (!d.is_zero()) ++nonzero;
            if (nonzero != s_k) throw std::logic_error("hermitian form rank does not match the Jordan data");

            for (const auto* rc : roots) {
                int sign = global_sign;
                if (e % 2 == 1) {
                    const CertifiedRoot& r = rc->cls.root;
                    if (!(abs(r.value.im) > r.radius))
                        throw PrecisionError("cannot certify sin(arg) for " + to_string(rc->cls.key), r.value.precision());
                    sign *= r.value.im.sign();
                }
                int pos = 0, neg = 0;
                double margin = 0;
                bool first = true;
                for (const auto& d : diag) {
                    if (d.is_zero()) continue;
                    auto sg = K.certified_sign(d, rc->cls.root);
                    if (!sg) throw PrecisionError("cannot certify a form sign for " + to_string(rc->cls.key), rc->cls.root.value.precision());
                    (*sg * sign > 0 ? pos : neg) += 1;
                    double mag = std::abs(d.eval(rc->cls.root.value).re.to_double());
                    if (first || mag < margin) margin = mag;
                    first = false;
                }
                out.push_back({rc->cls.key, k, rc->part.dimker[std::min(ku, rc->part.dimker.size() - 1)], pos - neg,
                               pos + neg, margin});
            }
        }
    }
    return out;
}

int HNumbers::p_count(const EigenKey& key, int k, int u) const {
    auto it = p.find({key, k, u});
    return it == p.end() ? 0 : it->second;
}

int HNumbers::q_count(const EigenKey& key, int k) const {
    auto it = q.find({key, k});
    return it == q.end() ? 0 : it->second;
}

int HNumbers::weighted_dim() const {
    int n = 0;
    for (const auto& [key, c] : p) n += key.k * c;
    for (const auto& [key, c] : q) n += 2 * key.k * c;
    return n;
}

HNumbers h_numbers(const std::vector<JordanClass>& jordan, const std::vector<EquivariantSignature>& eqsig,
                   std::size_t s0_dim) {
    HNumbers hn;
    hn.s0_dim = s0_dim;
    for (const auto& jc : jordan) {
        const auto& c = jc.cls;
        if (c.status == UnitCircleStatus::outside) continue;
        hn.eigen[c.key] = {c.root.value, c.status, c.turns, c.conjugate, c.root.real, c.root.radius};
        if (c.status == UnitCircleStatus::inside) {
            for (int k = 1; k <= jc.part.max_size(); ++k)
                if (int s = jc.part.blocks(k); s > 0) hn.q[{c.key, k}] = s;
        }
    }
    for (const auto& es : eqsig) {
        if (es.rank == 0) continue;
        if ((es.rank + es.sigma) % 2 != 0) throw std::logic_error("signature parity inconsistent with rank");
        int plus = (es.rank + es.sigma) / 2;
        int minus = (es.rank - es.sigma) / 2;
        if (plus < 0 || minus < 0) throw std::logic_error("negative H-number from signature inversion");
        if (plus) hn.p[{es.key, es.k, +1}] = plus;
        if (minus) hn.p[{es.key, es.k, -1}] = minus;
    }
    return hn;
}

std::vector<std::string> check_hnumbers(const HNumbers& hn, const std::vector<JordanClass>& jordan, std::size_t dim) {
    std::vector<std::string> bad;
    if (hn.weighted_dim() != static_cast<int>(dim)) bad.emplace_back("weighted H-number count differs from dim U");
    for (const auto& jc : jordan) {
        if (jc.cls.status != UnitCircleStatus::on) continue;
        for (int k = 1; k <= jc.part.max_size(); ++k)
            if (hn.p_count(jc.cls.key, k, 1) + hn.p_count(jc.cls.key, k, -1) != jc.part.blocks(k))
                bad.push_back("p^" + std::to_string(k) + "(+1) + p^" + std::to_string(k) + "(-1) != s_k at " + to_string(jc.cls.key));
    }
    for (const auto& [key, c] : hn.p) {
        auto info = hn.eigen.find(key.key);
        if (info == hn.eigen.end()) {
            bad.push_back("missing eigenvalue description for " + to_string(key.key));
            continue;
        }
        const int s = is_unit_one(key.key) ? 1 : 0;
        const int flip = ((key.k + s) % 2 == 0) ? 1 : -1;
        if (hn.p_count(info->second.conjugate, key.k, key.u * flip) != c)
            bad.push_back("conjugation symmetry fails for p^" + std::to_string(key.k) + " at " + to_string(key.key));
    }
    for (const auto& [key, c] : hn.q) {
        auto info = hn.eigen.find(key.key);
        if (info == hn.eigen.end() || hn.q_count(info->second.conjugate, key.k) != c)
            bad.push_back("conjugation symmetry fails for q^" + std::to_string(key.k) + " at " + to_string(key.key));
    }
    return bad;
}

HNumbers transform_mirror(const HNumbers& hn) {
    HNumbers r = hn;
    r.p.clear();
    for (const auto& [key, c] : hn.p) r.p[{key.key, key.k, -key.u}] = c;
    return r;
}

HNumbers transform_reverse(const HNumbers& hn) { return hn; }

HNumbers connected_sum(const HNumbers& a, const HNumbers& b) {
    HNumbers r = a;
    r.s0_dim += b.s0_dim;
    for (const auto& [key, c] : b.p) r.p[key] += c;
    for (const auto& [key, c] : b.q) r.q[key] += c;
    for (const auto& [key, info] : b.eigen) r.eigen.emplace(key, info);
    return r;
}

std::vector<std::string> algebraicity_obstructions(const HNumbers& hn) {
    std::vector<std::string> rep;
    std::set<std::string> seen;
    auto add = [&](const std::string& s) {
        if (seen.insert(s).second) rep.push_back(s);
    };
    for (const auto& [key, info] : hn.eigen)
        if (info.status != UnitCircleStatus::on || !info.turns)
            add("eigenvalue " + to_string(key) + " is not a root of unity");
    if (!hn.q.empty()) add("q^k_lambda != 0 (off-circle block)");
    for (const auto& [key, c] : hn.p) {
        if (c == 0) continue;
        const bool one = is_unit_one(key.key);
        if (!one && key.k > 2) add("block of size k > 2 for lambda != 1 at " + to_string(key.key));
        if (one && key.k > 1) add("block of size k > 1 for lambda = 1");
        if (!one && key.k == 2 && key.u == -1) add("p^2_lambda(-1) != 0 at " + to_string(key.key));
        if (one && key.k == 1 && key.u == -1) add("p^1_1(-1) != 0");
    }
    return rep;
}

}  // namespace hnum
