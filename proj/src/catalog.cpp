#include "hnum/catalog.hpp"

#include <numeric>

#include "hnum/seifert.hpp"

namespace hnum {

namespace {

RatMatrix bidiagonal(int m) {
    RatMatrix L(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(m - 1));
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(m); ++i) {
        L(i, i) = 1;
        if (i + 2 < static_cast<std::size_t>(m)) L(i, i + 1) = -1;
    }
    return L;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

LinkRecord knot(std::string name, RatMatrix S, std::vector<std::string> tags) {
    LinkRecord r;
    r.name = std::move(name);
    r.seifert = std::move(S);
    r.components = 1;
    r.tags = std::move(tags);
    return r;
}

// Adds the variation of the nondegenerate part, and the monodromy when printed.
LinkRecord with_variation(LinkRecord r, std::optional<RatMatrix> h) {
    const SeifertSplit split = split_degenerate({*r.seifert, r.name});
    r.variation = split.s_ndeg.transpose().inverse();
    r.monodromy = std::move(h);
    return r;
}

RatMatrix mirror(const RatMatrix& S) { return -S.transpose(); }

}  // namespace

RatMatrix torus_seifert(int p, int q) {
    if (p < 2 || q < 2) throw InputError("torus link parameters must be at least 2");
    return -kron(bidiagonal(p), bidiagonal(q));
}

std::vector<LinkRecord> builtin_catalog() {
    std::vector<LinkRecord> c;
    c.push_back(knot("trefoil", RatMatrix{{-1, 0}, {-1, -1}}, {"3_1", "torus"}));
    c.push_back(knot("figure-eight", RatMatrix{{1, 0}, {-1, -1}}, {"4_1"}));
    c.push_back(knot("5_1", RatMatrix{{-1, -1, 0, -1}, {0, -1, 0, 0}, {-1, -1, -1, -1}, {0, -1, 0, -1}}, {"torus"}));
    c.push_back(knot("8_20", RatMatrix{{-1, -1, -1, -1}, {0, 0, -1, -1}, {0, -1, 0, -1}, {0, 0, -1, 0}}, {}));
    for (int n : {-2, -1, 1, 2}) {
        LinkRecord r;
        r.name = "twist" + std::string(n > 0 ? "+" : "") + std::to_string(n);
        r.seifert = RatMatrix{{n}};
        r.components = 2;
        r.tags = {"twist link"};
        c.push_back(std::move(r));
    }
    c.push_back(with_variation(
        knot("10_99",
             RatMatrix{{-1, -1, 0, 0, 0, 0, -1, 0},
                       {0, -1, 0, 0, 0, 0, 0, 0},
                       {-1, -1, -1, 0, 0, 0, -1, 0},
                       {-1, 0, -1, 1, 0, 1, 0, 0},
                       {-1, -1, -1, 1, 1, 1, -1, 1},
                       {0, 0, 0, 0, 0, 1, 0, 0},
                       {0, -1, 0, 0, 0, 0, -1, 0},
                       {-1, -1, -1, 1, 0, 1, -1, 1}},
             {"monodromy h1"}),
        RatMatrix{{0, 0, -1, 0, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0, -1, 0},
                  {2, 1, 2, -1, 0, -1, 1, 0},
                  {0, 1, 0, 0, 0, 0, 1, -1},
                  {-1, -1, -1, 1, 1, 1, -1, 1},
                  {1, 0, 1, -1, 0, 0, 0, 0},
                  {-1, 1, 0, 0, 0, 0, 1, -1},
                  {0, 0, 0, 0, -1, 0, 0, 0}}));
    c.push_back(with_variation(
        knot("12n106",
             RatMatrix{{-1, 0, 0, 0, 0, 0, 0, 0},
                       {-1, -1, 0, 0, 0, 0, 0, 0},
                       {-1, -1, -1, -1, 0, 0, 0, 0},
                       {0, 0, 0, -1, 0, 0, 0, 0},
                       {0, 0, 0, 0, 1, 0, 1, 0},
                       {-1, -1, 0, -1, 1, 1, 1, 1},
                       {0, 0, 0, 0, 0, 0, 1, 0},
                       {0, 0, 0, 0, 1, 0, 1, 1}},
             {"monodromy h2"}),
        RatMatrix{{0, -1, 0, 0, 0, 0, 0, 0},
                  {1, 1, -1, 0, -1, -1, -1, -1},
                  {1, 1, 1, 1, 0, 0, 0, 0},
                  {0, 0, -1, 1, -1, -1, -1, -1},
                  {0, 0, 0, 0, 0, 0, 0, -1},
                  {-1, -1, 0, -1, 1, 1, 1, 1},
                  {0, 0, 0, 0, -1, 0, 0, 0},
                  {1, 1, 0, 1, 0, -1, 0, 0}}));
    c.push_back(with_variation(
        knot("12n508",
             mirror(RatMatrix{{-1, 0, 0, 0, 0, 0, 0, 0},
                              {-1, -1, 0, 0, 0, 0, 0, 0},
                              {-1, -1, 1, -1, 1, 0, -1, 0},
                              {0, 0, 0, -1, 0, 0, -1, 0},
                              {0, 0, 0, -1, 1, 0, -1, 0},
                              {-1, -1, 0, 0, 0, -1, 0, 0},
                              {0, 0, 0, 0, 0, 0, -1, 0},
                              {0, 0, 0, 1, 0, -1, 1, -1}}),
             {"mirror of table matrix"}),
        std::nullopt));
    c.push_back(with_variation(
        knot("12n604",
             mirror(RatMatrix{{-1, 0, -1, -1, -1, -1, 0, -1},
                              {0, 1, 0, 0, 0, 0, 1, 0},
                              {0, 1, 0, -1, 0, -1, 1, -1},
                              {0, 0, -1, 0, -1, -1, 0, -1},
                              {0, 1, -1, -1, 0, -1, 1, -1},
                              {0, 1, 0, -1, 0, 0, 1, -1},
                              {0, 0, 0, 0, 0, 0, 1, 0},
                              {0, 0, -1, 0, -1, -1, 0, 0}}),
             {"mirror of table matrix"}),
        std::nullopt));
    c.push_back(with_variation(
        knot("12n666",
             mirror(RatMatrix{{1, 0, 0, 0, 0, 0, -1, 0, 0, 0},
                              {0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
                              {0, -1, -1, 0, 0, 0, 0, 0, 0, 0},
                              {1, -1, -1, 0, 0, 0, -1, 1, 0, 0},
                              {1, -1, -1, 1, 0, 0, -1, 1, 1, 0},
                              {1, -1, -1, 1, 1, 0, -1, 1, 1, 1},
                              {0, -1, -1, 0, 0, 0, -1, 0, 0, 0},
                              {1, 0, -1, 0, 0, 0, -1, 1, 0, 0},
                              {1, -1, -1, 1, 0, 0, -1, 1, 0, 0},
                              {1, -1, -1, 1, 1, 0, -1, 1, 1, 0}}),
             {"mirror of table matrix"}),
        std::nullopt));
    for (auto [p, q] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{3, 4}}) {
        LinkRecord r;
        r.name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
        r.seifert = torus_seifert(p, q);
        r.components = std::gcd(p, q);
        r.tags = {"torus"};
        c.push_back(std::move(r));
    }
    return c;
}

LinkRecord catalog_entry(const std::string& name) {
    for (auto& r : builtin_catalog())
        if (r.name == name) return r;
    throw InputError("no catalog entry named " + name);
}

}  // namespace hnum
