#include "hnum/jordan.hpp"

#include <algorithm>
#include <sstream>

#include "hnum/factor.hpp"

namespace hnum {

std::string to_string(const EigenKey& k) {
    std::ostringstream os;
    os << "root " << k.index << " of " << k.factor.to_string();
    return os.str();
}

int JordanPartition::max_size() const {
    for (int k = static_cast<int>(s.size()) - 1; k >= 1; --k)
        if (s[static_cast<std::size_t>(k)] > 0) return k;
    return 0;
}

int JordanPartition::block_count() const {
    int n = 0;
    for (std::size_t k = 1; k < s.size(); ++k) n += s[k];
    return n;
}

std::vector<int> JordanPartition::theta() const {
    std::vector<int> t;
    for (std::size_t k = 1; k < s.size(); ++k)
        for (int i = 0; i < s[k]; ++i) t.push_back(static_cast<int>(k));
    return t;
}

JordanPartition partition_for_factor(const RatMatrix& h, const RatPoly& f, int multiplicity) {
    const std::size_t n = h.rows();
    const int d = f.degree();
    JordanPartition part;
    part.multiplicity = multiplicity;
    part.dimker.push_back(0);
    RatMatrix F = h.eval_poly(f);
    RatMatrix P = RatMatrix::identity(n);
    for (int j = 1; j <= multiplicity + 1; ++j) {
        P = P * F;
        std::size_t nullity = n - P.rank();
        if (nullity % static_cast<std::size_t>(d) != 0) throw std::logic_error("kernel dimension not divisible by factor degree");
        part.dimker.push_back(static_cast<int>(nullity / static_cast<std::size_t>(d)));
        if (part.dimker.back() == part.dimker[part.dimker.size() - 2]) break;
    }
    const int top = static_cast<int>(part.dimker.size()) - 1;
    auto dk = [&](int j) { return part.dimker[static_cast<std::size_t>(std::min(j, top))]; };
    part.s.assign(static_cast<std::size_t>(top + 1), 0);
    for (int k = 1; k <= top; ++k) part.s[static_cast<std::size_t>(k)] = 2 * dk(k) - dk(k - 1) - dk(k + 1);
    while (part.s.size() > 1 && part.s.back() == 0) part.s.pop_back();
    return part;
}

namespace {

std::optional<int> match_root(const std::vector<CertifiedRoot>& roots, const BigComplex& target) {
    std::optional<int> best;
    BigFloat best_dist(target.precision());
    for (const auto& r : roots) {
        BigFloat dist = (r.value - target).abs();
        if (!best || dist < best_dist) {
            best = r.index;
            best_dist = dist;
        }
    }
    return best;
}

std::optional<Rational> exact_turns(const RatPoly& f, const CertifiedRoot& root) {
    unsigned q = cyclotomic_index(f);
    if (q == 0) return std::nullopt;
    Precision prec = root.value.precision();
    BigFloat t = root.value.arg() / (BigFloat::pi(prec) * BigFloat(2L, prec)) * BigFloat(static_cast<long>(q), prec);
    BigFloat rounded = floor(t + BigFloat(0.5, prec));
    long a = static_cast<long>(rounded.to_double());
    a %= static_cast<long>(q);
    if (a < 0) a += static_cast<long>(q);
    Rational r(a, static_cast<long>(q));
    r.canonicalize();
    return r;
}

}  // namespace

std::vector<JordanClass> jordan_partition(const RatMatrix& h, Precision prec) {
    std::vector<JordanClass> out;
    if (h.rows() == 0) return out;
    const RatPoly chi = h.charpoly();
    struct FactorRoots {
        RatPoly f;
        std::vector<CertifiedRoot> roots;
    };
    std::vector<FactorRoots> all;
    for (const auto& fp : squarefree_factor_q(chi)) {
        auto roots = isolate_squarefree(fp.factor, prec);
        if (any_undecided(roots))
            throw PrecisionError("eigenvalue placement undecided for factor " + fp.factor.to_string(), prec);
        JordanPartition part = partition_for_factor(h, fp.factor, fp.multiplicity);
        for (auto& r : roots) {
            r.multiplicity = fp.multiplicity;
            JordanClass jc;
            jc.cls.key = {fp.factor, r.index};
            jc.cls.status = r.status;
            jc.cls.turns = r.status == UnitCircleStatus::on ? exact_turns(fp.factor, r) : std::nullopt;
            jc.cls.root = r;
            jc.part = part;
            out.push_back(std::move(jc));
        }
        all.push_back({fp.factor, std::move(roots)});
    }
    // Conjugate and reflection links.
    for (auto& jc : out) {
        const BigComplex& z = jc.cls.root.value;
        const auto& own = std::find_if(all.begin(), all.end(), [&](const FactorRoots& fr) { return fr.f == jc.cls.key.factor; })->roots;
        jc.cls.conjugate = {jc.cls.key.factor, *match_root(own, z.conj())};
        RatPoly rf = jc.cls.key.factor.reciprocal().primitive_part();
        auto it = std::find_if(all.begin(), all.end(), [&](const FactorRoots& fr) { return fr.f == rf; });
        if (it != all.end()) {
            BigComplex target = BigComplex(BigFloat(1L, z.precision()), BigFloat(z.precision())) / z.conj();
            jc.cls.reflection = EigenKey{rf, *match_root(it->roots, target)};
        }
    }
    return out;
}

const JordanClass* find_class(const std::vector<JordanClass>& classes, const EigenKey& key) {
    for (const auto& c : classes)
        if (c.cls.key == key) return &c;
    return nullptr;
}

PairingReport eigen_pairing_check(const std::vector<JordanClass>& classes) {
    PairingReport rep;
    for (const auto& c : classes) {
        const JordanClass* conj = find_class(classes, c.cls.conjugate);
        if (!conj || conj->part.s != c.part.s)
            rep.violations.push_back("partition differs from its conjugate at " + to_string(c.cls.key));
        if (c.cls.status != UnitCircleStatus::on) {
            const JordanClass* refl = c.cls.reflection ? find_class(classes, *c.cls.reflection) : nullptr;
            if (!refl || refl->part.s != c.part.s)
                rep.violations.push_back("off-circle class lacks a matching 1/conj partner at " + to_string(c.cls.key));
        }
    }
    return rep;
}

}  // namespace hnum
