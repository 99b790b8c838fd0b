#include "gtable/supercochain.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>

namespace gtable::cochain {

namespace {

std::vector<int> bits(std::uint32_t s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

// Sign of merging the ascending wedge A with the ascending wedge B.
int merge_sign(std::uint32_t a, std::uint32_t b) {
    int inversions = 0;
    for (int j : bits(b)) inversions += std::popcount(a >> (j + 1));
    return inversions % 2 ? -1 : 1;
}

int parity_sign(long e) { return e % 2 ? -1 : 1; }

// Canonical form of an unsorted wedge; 0 when an index repeats.
std::pair<int, std::uint32_t> canonical(std::vector<int> idx) {
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    std::uint32_t s = 0;
    for (int i : idx) {
        if (i < 0 || i >= kMaxDim) throw DimensionError("basis index out of range");
        if (s & (1u << i)) return {0, 0};
        s |= 1u << i;
    }
    return {sign, s};
}

}  // namespace

int Monomial::p() const { return std::popcount(duals); }
int Monomial::q() const { return std::popcount(primals); }
std::vector<int> Monomial::dual_indices() const { return bits(duals); }
std::vector<int> Monomial::primal_indices() const { return bits(primals); }

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = p() <=> o.p(); c != 0) return c;
    if (auto c = q() <=> o.q(); c != 0) return c;
    if (auto c = dual_indices() <=> o.dual_indices(); c != 0) return c;
    return primal_indices() <=> o.primal_indices();
}

// ---------------------------------------------------------------- element

BigradedElement BigradedElement::one() { return from_monomial(Monomial{}); }

BigradedElement BigradedElement::monomial(const std::vector<int>& duals,
                                          const std::vector<int>& primals, const Scalar& c) {
    auto [s1, d] = canonical(duals);
    auto [s2, p] = canonical(primals);
    BigradedElement e;
    if (s1 && s2) e.add_term(Monomial{d, p}, c * s1 * s2);
    return e;
}

BigradedElement BigradedElement::from_monomial(const Monomial& m, const Scalar& c) {
    BigradedElement e;
    e.add_term(m, c);
    return e;
}

Scalar BigradedElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void BigradedElement::add_term(const Monomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigradedElement BigradedElement::homogeneous(int p, int q) const {
    BigradedElement e;
    for (const auto& [m, c] : terms_)
        if (m.p() == p && m.q() == q) e.terms_.emplace(m, c);
    return e;
}

std::optional<std::pair<int, int>> BigradedElement::bidegree() const {
    if (terms_.empty()) return std::nullopt;
    auto first = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (m.p() != first.p() || m.q() != first.q()) return std::nullopt;
    return std::make_pair(first.p(), first.q());
}

BigradedElement& BigradedElement::operator+=(const BigradedElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BigradedElement& BigradedElement::operator-=(const BigradedElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BigradedElement operator*(const Scalar& s, const BigradedElement& a) {
    BigradedElement r;
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
    return r;
}

BigradedElement BigradedElement::operator-() const { return Scalar(-1) * *this; }

// ---------------------------------------------------------------- product and bracket

BigradedElement vee(const BigradedElement& a, const BigradedElement& b) {
    BigradedElement r;
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms()) {
            if ((m1.duals & m2.duals) || (m1.primals & m2.primals)) continue;
            int sign = parity_sign(long(m2.p()) * m1.q()) * merge_sign(m1.duals, m2.duals) *
                       merge_sign(m1.primals, m2.primals);
            r.add_term(Monomial{m1.duals | m2.duals, m1.primals | m2.primals}, sign * c1 * c2);
        }
    return r;
}

std::vector<Generator> factors(const Monomial& m) {
    std::vector<Generator> g;
    for (int i : m.dual_indices()) g.push_back({true, i});
    for (int j : m.primal_indices()) g.push_back({false, j});
    return g;
}

namespace {

BigradedElement generator(const Generator& g) {
    Monomial m;
    (g.dual ? m.duals : m.primals) = 1u << g.index;
    return BigradedElement::from_monomial(m);
}

BigradedElement product_range(const Generator* begin, const Generator* end) {
    BigradedElement r = BigradedElement::one();
    for (auto it = begin; it != end; ++it) r = vee(r, generator(*it));
    return r;
}

// The pairing on generators: {phi_i, e_j} = {e_j, phi_i} = delta_ij.
Scalar pairing(const Generator& x, const Generator& y) {
    return x.dual != y.dual && x.index == y.index ? 1 : 0;
}

// {x, y_1 v ... v y_l} for a generator x, peeling y_1 and swapping sides with super-antisymmetry.
BigradedElement bracket_generator(const Generator& x, const Generator* begin, const Generator* end) {
    const long l = end - begin;
    if (l == 0) return {};
    const Generator& y = *begin;
    BigradedElement rest = product_range(begin + 1, end);
    // {C', x} = -(-1)^{(l-1)} {x, C'}
    BigradedElement c_x = Scalar(-parity_sign(l - 1)) * bracket_generator(x, begin + 1, end);
    // {y v C', x} = y v {C', x} + (-1)^{l-1} C' v {y, x}
    BigradedElement swapped = vee(generator(y), c_x);
    Scalar yx = pairing(y, x);
    if (yx != 0) swapped += Scalar(parity_sign(l - 1)) * yx * rest;
    // {x, b} = -(-1)^{|x||b|} {b, x}
    return Scalar(-parity_sign(l)) * swapped;
}

BigradedElement bracket_generator(const Generator& x, const BigradedElement& c) {
    BigradedElement r;
    for (const auto& [m, coeff] : c.terms()) {
        auto f = factors(m);
        r += coeff * bracket_generator(x, f.data(), f.data() + f.size());
    }
    return r;
}

BigradedElement peel(const Generator* begin, const Generator* end, const BigradedElement& c) {
    const long k = end - begin;
    if (k == 0) return {};
    // {x v A', c} = x v {A', c} + (-1)^{|A'|} A' v {x, c}
    BigradedElement r = vee(generator(*begin), peel(begin + 1, end, c));
    r += Scalar(parity_sign(k - 1)) * vee(product_range(begin + 1, end), bracket_generator(*begin, c));
    return r;
}

}  // namespace

BigradedElement product(const std::vector<Generator>& gens) {
    return product_range(gens.data(), gens.data() + gens.size());
}

BigradedElement bracket_peeled(const std::vector<Generator>& gens, const BigradedElement& c) {
    return peel(gens.data(), gens.data() + gens.size(), c);
}

BigradedElement bracket(const BigradedElement& a, const BigradedElement& b) {
    BigradedElement r;
    for (const auto& [m, coeff] : a.terms()) r += coeff * bracket_peeled(factors(m), b);
    return r;
}

// ---------------------------------------------------------------- context

ComplexContext ComplexContext::from_lie_bracket(int n, const std::vector<std::vector<Vector>>& structure,
                                                std::vector<std::string> primal_names,
                                                std::vector<std::string> dual_names) {
    if (n < 0 || n > kMaxDim) throw InvalidContext("unsupported dimension");
    ComplexContext ctx;
    ctx.n = n;
    for (int i = 0; i < n; ++i) {
        if (primal_names.size() < std::size_t(n)) primal_names.push_back("e_{" + std::to_string(i + 1) + "}");
        if (dual_names.size() < std::size_t(n)) dual_names.push_back("e^{" + std::to_string(i + 1) + "}");
    }
    ctx.primal_names = std::move(primal_names);
    ctx.dual_names = std::move(dual_names);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar& c = structure.at(i).at(j).at(k);
                if (c != 0) ctx.mu += BigradedElement::monomial({i, j}, {k}, c);
            }
    return ctx;
}

void ComplexContext::validate() const {
    if (int(primal_names.size()) != n || int(dual_names.size()) != n)
        throw InvalidContext("basis names do not match the dimension");
    if (!mu.is_zero() && mu.bidegree() != std::make_pair(2, 1))
        throw InvalidContext("mu must have bidegree (2,1)");
    if (!bracket(mu, mu).is_zero()) throw InvalidContext("{mu, mu} != 0: bracket violates Jacobi");
    if (sl2)
        for (const auto& X : *sl2)
            if (X.rows() != std::size_t(n) || X.cols() != std::size_t(n))
                throw InvalidContext("sl2 operator shape mismatch");
}

BigradedElement differential(const BigradedElement& c, const ComplexContext& ctx) {
    return bracket(ctx.mu, c);
}

BigradedElement sl2_act(int X, const BigradedElement& c, const ComplexContext& ctx) {
    if (!ctx.sl2) throw InvalidContext("context carries no sl2 action");
    const Matrix& op = (*ctx.sl2).at(X);
    auto image = [&](const Generator& g) {
        BigradedElement r;
        for (int k = 0; k < ctx.n; ++k) {
            // duals transform by the negative transpose
            Scalar coeff = g.dual ? -op(g.index, k) : op(k, g.index);
            if (coeff == 0) continue;
            Monomial m;
            (g.dual ? m.duals : m.primals) = 1u << k;
            r.add_term(m, coeff);
        }
        return r;
    };
    BigradedElement r;
    for (const auto& [m, coeff] : c.terms()) {
        auto f = factors(m);
        for (std::size_t t = 0; t < f.size(); ++t) {
            BigradedElement term = BigradedElement::one();
            for (std::size_t u = 0; u < f.size(); ++u) {
                BigradedElement next;
                if (u == t) {
                    next = image(f[u]);
                } else {
                    next = BigradedElement::from_monomial(
                        f[u].dual ? Monomial{1u << f[u].index, 0} : Monomial{0, 1u << f[u].index});
                }
                term = vee(term, next);
            }
            r += coeff * term;
        }
    }
    return r;
}

// ---------------------------------------------------------------- coordinates

namespace {

std::vector<std::uint32_t> subsets(int n, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (std::popcount(s) == k) out.push_back(s);
    std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) { return bits(a) < bits(b); });
    return out;
}

}  // namespace

std::vector<Monomial> basis(int n, int p, int q) {
    std::vector<Monomial> out;
    if (p < 0 || q < 0 || p > n || q > n) return out;
    for (auto d : subsets(n, p))
        for (auto e : subsets(n, q)) out.push_back(Monomial{d, e});
    return out;
}

Vector to_vector(const BigradedElement& c, int n, int p, int q) {
    auto b = basis(n, p, q);
    Vector v(b.size());
    std::size_t found = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        v[i] = c.coefficient(b[i]);
        if (v[i] != 0) ++found;
    }
    if (found != c.terms().size()) throw DimensionError("element is not homogeneous of the requested bidegree");
    return v;
}

BigradedElement from_vector(const Vector& v, int n, int p, int q) {
    auto b = basis(n, p, q);
    if (v.size() != b.size()) throw DimensionError("coordinate vector length mismatch");
    BigradedElement e;
    for (std::size_t i = 0; i < b.size(); ++i) e.add_term(b[i], v[i]);
    return e;
}

Matrix differential_matrix(const ComplexContext& ctx, int p, int q) {
    auto src = basis(ctx.n, p, q);
    auto dst = basis(ctx.n, p + 1, q);
    Matrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        auto d = differential(BigradedElement::from_monomial(src[j]), ctx);
        for (std::size_t i = 0; i < dst.size(); ++i) m(i, j) = d.coefficient(dst[i]);
    }
    return m;
}

namespace {

Cohomology spaces(const ComplexContext& ctx, int p, int q) {
    if (p < 0 || q < 0 || p > ctx.n || q > ctx.n) throw DimensionError("bidegree out of range");
    Cohomology h;
    h.p = p;
    h.q = q;
    const std::size_t dim = basis(ctx.n, p, q).size();
    h.cocycles = p < ctx.n ? la::kernel(differential_matrix(ctx, p, q)) : la::Subspace::full(dim);
    h.boundaries = p > 0 ? la::image(differential_matrix(ctx, p - 1, q)) : la::Subspace(dim);
    return h;
}

}  // namespace

Cohomology cohomology(const ComplexContext& ctx, int p, int q) {
    Cohomology h = spaces(ctx, p, q);
    la::Subspace covered = h.boundaries;
    for (const auto& z : h.cocycles.basis()) {
        if (covered.contains(z)) continue;
        h.reps.push_back(from_vector(z, ctx.n, p, q));
        covered = covered + la::Subspace::span(z.size(), {z});
    }
    return h;
}

Cohomology cohomology_with(const ComplexContext& ctx, int p, int q,
                           const std::vector<BigradedElement>& reps) {
    Cohomology h = spaces(ctx, p, q);
    std::vector<Vector> vs;
    for (const auto& r : reps) {
        Vector v = to_vector(r, ctx.n, p, q);
        if (!h.cocycles.contains(v)) throw InvalidContext("representative is not a cocycle: " + render(r, &ctx));
        vs.push_back(std::move(v));
    }
    la::Subspace spanned = h.boundaries + la::Subspace::span(h.cocycles.ambient_dim(), vs);
    if (spanned.dim() != h.boundaries.dim() + reps.size() || !(spanned == h.cocycles))
        throw InvalidContext("representatives do not form a basis of the cohomology");
    h.reps = reps;
    return h;
}

Vector class_coords(const BigradedElement& z, const Cohomology& h, const ComplexContext& ctx) {
    if (z.is_zero()) return Vector(h.reps.size());
    Vector v = to_vector(z, ctx.n, h.p, h.q);
    if (!h.cocycles.contains(v)) throw NotACocycle(render(z, &ctx));
    std::vector<Vector> reps;
    for (const auto& r : h.reps) reps.push_back(to_vector(r, ctx.n, h.p, h.q));
    auto c = la::coords_modulo(v, reps, h.boundaries);
    if (!c) throw InvalidContext("cocycle outside the span of the representatives");
    return *c;
}

// ---------------------------------------------------------------- rendering

std::string render(const BigradedElement& c, const ComplexContext* ctx) {
    if (c.is_zero()) return "0";
    auto name = [&](bool dual, int i) {
        if (ctx) return dual ? ctx->dual_names.at(i) : ctx->primal_names.at(i);
        return std::string(dual ? "e^{" : "e_{") + std::to_string(i + 1) + "}";
    };
    std::string out;
    bool first = true;
    for (const auto& [m, coeff] : c.terms()) {
        Scalar a = abs(coeff);
        out += first ? (coeff < 0 ? "-" : "") : (coeff < 0 ? " - " : " + ");
        first = false;
        if (a != 1) out += la::to_string(a) + " ";
        std::string left, right;
        for (int i : m.dual_indices()) left += name(true, i);
        for (int j : m.primal_indices()) right += name(false, j);
        out += (left.empty() ? "1" : left) + "⊗" + (right.empty() ? "1" : right);
    }
    return out;
}

std::string to_json(const BigradedElement& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, coeff] : c.terms())
        terms.push_back({{"I", m.dual_indices()}, {"J", m.primal_indices()}, {"c", la::to_string(coeff)}});
    return nlohmann::json{{"terms", terms}}.dump();
}

}  // namespace gtable::cochain
