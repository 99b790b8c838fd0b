#include "gtable/gtable.hpp"

#include <algorithm>
#include <tuple>

namespace gtable {

std::vector<SummandInfo> summand_infos(const rep::Decomposition& dec) {
    std::vector<SummandInfo> out;
    for (const auto& s : dec.summands) out.push_back({s.id, s.irrep, s.hwv_weight});
    return out;
}

// ---------------------------------------------------------------- GTable

const GTable::Cell& GTable::cell(std::size_t r1, std::size_t r2) const {
    static const Cell none;
    auto it = entries_.find({r1, r2});
    return it == entries_.end() ? none : it->second;
}

Scalar GTable::coefficient(std::size_t r1, std::size_t r2, std::size_t s, int q) const {
    for (const auto& e : cell(r1, r2))
        if (e.s == s && e.q == q) return e.c;
    return 0;
}

void GTable::add(std::size_t r1, std::size_t r2, std::size_t s, int q, const Scalar& c) {
    if (r1 >= source_.size() || r2 >= source_.size() || s >= target_.size() || q < 1)
        throw DimensionError("table index out of range");
    if (c == 0) return;
    Cell& cell = entries_[{r1, r2}];
    auto it = std::find_if(cell.begin(), cell.end(), [&](const TableEntry& e) { return e.s == s && e.q == q; });
    if (it == cell.end()) {
        cell.push_back({s, q, c});
        std::sort(cell.begin(), cell.end(),
                  [](const TableEntry& a, const TableEntry& b) { return std::tie(a.s, a.q) < std::tie(b.s, b.q); });
    } else {
        it->c += c;
        if (it->c == 0) cell.erase(it);
    }
    if (cell.empty()) entries_.erase({r1, r2});
}

namespace {

std::size_t find_id(const std::vector<SummandInfo>& v, std::string_view id) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].id == id) return i;
    throw ParseError("unknown summand '" + std::string(id) + "'");
}

}  // namespace

std::size_t GTable::source_index(std::string_view id) const { return find_id(source_, id); }
std::size_t GTable::target_index(std::string_view id) const { return find_id(target_, id); }

// ---------------------------------------------------------------- extraction

void check_equivariant(const rep::GModule& m, const rep::Bilinear& product) {
    const std::size_t n = m.dim;
    if (product.left_dim() != n || product.right_dim() != n || product.out_dim() != n)
        throw DimensionError("product shape does not match the module");
    std::vector<Vector> cols(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cols[i * n + j] = product.on_basis(i, j);
    for (std::size_t g = 0; g < m.ops.size(); ++g) {
        const Matrix& X = m.ops[g];
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (X(k, j) != 0) sparse[j].emplace_back(k, X(k, j));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector lhs = X * cols[i * n + j];
                Vector rhs(n);
                if (m.group.derivation_action()) {
                    for (auto& [k, x] : sparse[i]) la::axpy(x, cols[k * n + j], rhs);
                    for (auto& [k, x] : sparse[j]) la::axpy(x, cols[i * n + k], rhs);
                } else {
                    for (auto& [k, x] : sparse[i])
                        for (auto& [l, y] : sparse[j]) la::axpy(x * y, cols[k * n + l], rhs);
                }
                if (lhs != rhs)
                    throw NotEquivariant("product fails equivariance on basis pair (" + std::to_string(i) + ", " +
                                         std::to_string(j) + ") under operator " + std::to_string(g));
            }
    }
}

GTable extract(const rep::GModule& m, const rep::Bilinear& product, const rep::Decomposition& dec,
               const rep::Registry& reg, const rep::Decomposition* target_dec) {
    const rep::Decomposition& tdec = target_dec ? *target_dec : dec;
    if (m.group != reg.group() || dec.group != reg.group() || tdec.group != reg.group())
        throw ShapeMismatch("module, decompositions and labeling use different groups");
    dec.validate(m, reg);
    if (target_dec) tdec.validate(m, reg);
    check_equivariant(m, product);

    GTable t(reg.group(), reg.name(), summand_infos(dec), summand_infos(tdec));
    const std::size_t n = m.dim;
    for (std::size_t r1 = 0; r1 < dec.summands.size(); ++r1)
        for (std::size_t r2 = 0; r2 < dec.summands.size(); ++r2) {
            const auto& a = dec.summands[r1];
            const auto& b = dec.summands[r2];
            const std::size_t da = a.tau.cols(), db = b.tau.cols();
            const std::size_t rows = da * db * n;

            Vector rhs(rows);
            for (std::size_t i = 0; i < da; ++i)
                for (std::size_t j = 0; j < db; ++j) {
                    Vector v = product.apply(a.tau.column(i), b.tau.column(j));
                    std::copy(v.begin(), v.end(), rhs.begin() + (i * db + j) * n);
                }

            std::vector<Vector> cols;
            std::vector<std::pair<std::size_t, int>> labels;
            for (std::size_t s = 0; s < tdec.summands.size(); ++s) {
                const auto& c = tdec.summands[s];
                const auto& maps = reg.maps(a.irrep, b.irrep, c.irrep);
                for (std::size_t q = 0; q < maps.size(); ++q) {
                    Vector col(rows);
                    for (std::size_t i = 0; i < da; ++i)
                        for (std::size_t j = 0; j < db; ++j) {
                            Vector v = c.tau * maps[q].on_basis(i, j);
                            std::copy(v.begin(), v.end(), col.begin() + (i * db + j) * n);
                        }
                    cols.push_back(std::move(col));
                    labels.emplace_back(s, int(q + 1));
                }
            }

            const std::string where = a.id + " x " + b.id;
            if (cols.empty()) {
                if (!la::is_zero(rhs))
                    throw InconsistentSystem("product " + where + " is nonzero but no intertwiner of the labeling reaches it");
                continue;
            }
            Matrix sys = Matrix::from_columns(cols, rows);
            auto sol = la::solve(sys, rhs);
            if (!sol)
                throw InconsistentSystem("product " + where +
                                         " has a component outside the span of the labeled intertwiners");
            if (sol->kernel.dim() != 0)
                throw AmbiguousSystem("candidate intertwiners for " + where + " are linearly dependent");
            if (sys * sol->particular != rhs) throw InconsistentSystem("re-evaluation failed for " + where);
            for (std::size_t k = 0; k < labels.size(); ++k)
                t.add(r1, r2, labels[k].first, labels[k].second, sol->particular[k]);
        }
    return t;
}

namespace {

std::vector<std::size_t> model_offsets(const std::vector<SummandInfo>& s, const rep::Registry& reg,
                                       std::size_t* total = nullptr) {
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (const auto& x : s) {
        off.push_back(o);
        o += reg.model(x.irrep).dim();
    }
    if (total) *total = o;
    return off;
}

}  // namespace

rep::Bilinear expand(const GTable& t, const rep::Registry& reg) {
    std::size_t ns = 0, nt = 0;
    auto so = model_offsets(t.source(), reg, &ns);
    auto to = model_offsets(t.target(), reg, &nt);
    rep::Bilinear out(ns, ns, nt);
    for (const auto& [key, cell] : t.entries()) {
        auto [r1, r2] = key;
        const auto& i1 = t.source()[r1].irrep;
        const auto& i2 = t.source()[r2].irrep;
        for (const auto& e : cell) {
            const auto& maps = reg.maps(i1, i2, t.target()[e.s].irrep);
            if (e.q < 1 || std::size_t(e.q) > maps.size())
                throw ShapeMismatch("table entry refers to a missing intertwiner");
            const auto& m = maps[e.q - 1];
            for (std::size_t i = 0; i < m.left_dim(); ++i)
                for (std::size_t j = 0; j < m.right_dim(); ++j)
                    for (std::size_t k = 0; k < m.out_dim(); ++k)
                        if (m.at(k, i, j) != 0) out.at(to[e.s] + k, so[r1] + i, so[r2] + j) += e.c * m.at(k, i, j);
        }
    }
    return out;
}

rep::GModule model_module(const std::vector<SummandInfo>& summands, const rep::Registry& reg) {
    std::size_t dim = 0;
    auto off = model_offsets(summands, reg, &dim);
    rep::GModule m{reg.group(), dim, {}, {}};
    for (std::size_t r = 0; r < summands.size(); ++r) {
        const auto& model = reg.model(summands[r].irrep).module;
        if (m.ops.empty()) m.ops.assign(model.ops.size(), Matrix(dim, dim));
        for (std::size_t g = 0; g < model.ops.size(); ++g)
            for (std::size_t i = 0; i < model.dim; ++i)
                for (std::size_t j = 0; j < model.dim; ++j) m.ops[g](off[r] + i, off[r] + j) = model.ops[g](i, j);
        for (std::size_t i = 0; i < model.dim; ++i)
            m.basis_names.push_back(summands[r].id + "." +
                                    (i < model.basis_names.size() ? model.basis_names[i] : std::to_string(i)));
    }
    return m;
}

rep::Decomposition model_decomposition(const std::vector<SummandInfo>& summands, const rep::Registry& reg) {
    std::size_t dim = 0;
    auto off = model_offsets(summands, reg, &dim);
    rep::Decomposition dec{reg.group(), dim, {}};
    for (std::size_t r = 0; r < summands.size(); ++r) {
        const std::size_t d = reg.model(summands[r].irrep).dim();
        Matrix tau(dim, d);
        for (std::size_t i = 0; i < d; ++i) tau(off[r] + i, i) = 1;
        dec.summands.push_back({summands[r].id, summands[r].irrep, summands[r].hwv_weight, tau});
    }
    return dec;
}

// ---------------------------------------------------------------- morphisms

GMatrix GMatrix::identity(const std::vector<SummandInfo>& summands) {
    GMatrix f(summands, summands);
    for (std::size_t r = 0; r < summands.size(); ++r) f.set(r, r, 1);
    return f;
}

Scalar GMatrix::at(std::size_t x, std::size_t r) const {
    auto it = entries_.find({x, r});
    return it == entries_.end() ? Scalar(0) : it->second;
}

void GMatrix::set(std::size_t x, std::size_t r, const Scalar& c) {
    if (x >= target_.size() || r >= source_.size()) throw DimensionError("G-matrix index out of range");
    if (c == 0)
        entries_.erase({x, r});
    else
        entries_[{x, r}] = c;
}

void GMatrix::validate() const {
    for (const auto& [key, c] : entries_)
        if (target_[key.first].irrep != source_[key.second].irrep)
            throw ShapeMismatch("entry (" + target_[key.first].id + ", " + source_[key.second].id +
                                ") links summands of different types");
}

namespace {

void check_shapes(const GTable& a, const GTable& b, const GMatrix& f) {
    if (a.source() != a.target() || b.source() != b.target())
        throw ShapeMismatch("morphism check needs tables of algebras (same source and target summands)");
    if (a.group() != b.group() || a.labeling() != b.labeling())
        throw ShapeMismatch("tables use different labelings");
    auto same_types = [](const std::vector<SummandInfo>& x, const std::vector<SummandInfo>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].irrep != y[i].irrep) return false;
        return true;
    };
    if (!same_types(f.source(), a.source()) || !same_types(f.target(), b.source()))
        throw ShapeMismatch("G-matrix summands do not match the tables");
    f.validate();
}

}  // namespace

bool check_morphism(const GTable& a, const GTable& b, const GMatrix& f) {
    check_shapes(a, b, f);
    const std::size_t na = a.source().size(), nb = b.source().size();
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_source(na);  // r -> (x, f)
    for (const auto& [key, c] : f.entries()) by_source[key.second].emplace_back(key.first, c);

    std::map<std::tuple<std::size_t, std::size_t, std::size_t, int>, Scalar> residual;
    for (const auto& [key, cell] : a.entries())
        for (const auto& e : cell)
            for (const auto& [y, fy] : by_source[e.s])
                residual[{key.first, key.second, y, e.q}] += e.c * fy;

    std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_target(nb);  // x -> (r, f)
    for (const auto& [key, c] : f.entries()) by_target[key.first].emplace_back(key.second, c);
    for (const auto& [key, cell] : b.entries())
        for (const auto& e : cell)
            for (const auto& [r1, f1] : by_target[key.first])
                for (const auto& [r2, f2] : by_target[key.second])
                    residual[{r1, r2, e.s, e.q}] -= e.c * f1 * f2;

    return std::all_of(residual.begin(), residual.end(), [](const auto& kv) { return kv.second == 0; });
}

Matrix assemble_map(const GMatrix& f, const rep::Registry& reg) {
    f.validate();
    std::size_t ns = 0, nt = 0;
    auto so = model_offsets(f.source(), reg, &ns);
    auto to = model_offsets(f.target(), reg, &nt);
    Matrix phi(nt, ns);
    for (const auto& [key, c] : f.entries()) {
        std::size_t d = reg.model(f.source()[key.second].irrep).dim();
        for (std::size_t i = 0; i < d; ++i) phi(to[key.first] + i, so[key.second] + i) = c;
    }
    return phi;
}

bool is_algebra_morphism(const rep::Bilinear& a, const rep::Bilinear& b, const Matrix& phi) {
    if (phi.cols() != a.left_dim() || phi.rows() != b.left_dim()) throw DimensionError("map shape mismatch");
    for (std::size_t i = 0; i < a.left_dim(); ++i) {
        Vector pi = phi.column(i);
        for (std::size_t j = 0; j < a.right_dim(); ++j)
            if (phi * a.on_basis(i, j) != b.apply(pi, phi.column(j))) return false;
    }
    return true;
}

ChoiceQ forced_choices(const rep::Registry& reg) {
    ChoiceQ q;
    for (const auto& [triple, maps] : reg.all_maps())
        if (maps.size() == 1) q[triple] = 1;
    return q;
}

std::vector<ChoiceQ> all_choices(const rep::Registry& reg) {
    std::vector<ChoiceQ> out{ChoiceQ{}};
    for (const auto& [triple, maps] : reg.all_maps()) {
        std::vector<ChoiceQ> next;
        for (const auto& partial : out)
            for (int q = 1; q <= int(maps.size()); ++q) {
                ChoiceQ c = partial;
                c[triple] = q;
                next.push_back(std::move(c));
            }
        out = std::move(next);
    }
    return out;
}

PlainAlgebra plain_algebra(const GTable& t, const ChoiceQ& q) {
    PlainAlgebra p;
    for (const auto& s : t.source()) p.ids.push_back(s.id);
    p.constants = rep::Bilinear(t.source().size(), t.source().size(), t.target().size());
    for (const auto& [key, cell] : t.entries())
        for (const auto& e : cell) {
            rep::Triple tr{t.source()[key.first].irrep, t.source()[key.second].irrep, t.target()[e.s].irrep};
            auto it = q.find(tr);
            if (it == q.end())
                throw MissingChoice("no intertwiner chosen for (" + tr.left.name() + ", " + tr.right.name() + ", " +
                                    tr.out.name() + ")");
            if (it->second == e.q) p.constants.at(e.s, key.first, key.second) += e.c;
        }
    return p;
}

Matrix plain_map(const GMatrix& f) {
    f.validate();
    Matrix m(f.target().size(), f.source().size());
    for (const auto& [key, c] : f.entries()) m(key.first, key.second) = c;
    return m;
}

bool corollary_check(const GTable& a, const GTable& b, const GMatrix& f, const rep::Registry& reg) {
    check_shapes(a, b, f);
    Matrix phi = plain_map(f);
    for (const auto& q : all_choices(reg))
        if (!is_algebra_morphism(plain_algebra(a, q).constants, plain_algebra(b, q).constants, phi)) return false;
    return true;
}

GTable cotable(const rep::GModule& dual_module, const Matrix& coproduct, const rep::Decomposition& dec,
               const rep::Registry& reg) {
    const std::size_t n = dual_module.dim;
    if (coproduct.rows() != n * n || coproduct.cols() != n)
        throw DimensionError("coproduct must be a (dim*dim) x dim matrix");
    return extract(dual_module, rep::Bilinear(n, n, coproduct.transpose()), dec, reg);
}

}  // namespace gtable
