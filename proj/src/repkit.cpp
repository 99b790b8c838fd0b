#include "gtable/repkit.hpp"

#include <algorithm>
#include <deque>

namespace gtable::rep {

std::string Group::name() const {
    switch (kind) {
        case GroupKind::SL2: return "SL2";
        case GroupKind::GL: return "GL" + std::to_string(k);
        case GroupKind::S3: return "S3";
    }
    return "?";
}

Group Group::parse(const std::string& name) {
    if (name == "SL2") return sl2();
    if (name == "S3") return s3();
    if (name.size() > 2 && name.rfind("GL", 0) == 0) {
        try {
            std::size_t used = 0;
            int k = std::stoi(name.substr(2), &used);
            if (used == name.size() - 2 && k >= 2) return gl(k);
        } catch (const std::exception&) {
        }
    }
    throw ParseError("unknown group '" + name + "'");
}

std::string IrrepId::label_name() const {
    switch (group.kind) {
        case GroupKind::SL2: return std::to_string(label);
        case GroupKind::GL: return label == kTrivial ? "trivial" : "adjoint";
        case GroupKind::S3: return label == kTr ? "tr" : label == kSg ? "sg" : "std";
    }
    return "?";
}

std::string IrrepId::name() const {
    if (group.kind == GroupKind::SL2) return "V_" + std::to_string(label);
    return group.name() + ":" + label_name();
}

// ---------------------------------------------------------------- modules

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) throw InvalidModule(what);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

}  // namespace

void GModule::validate() const {
    for (const auto& op : ops)
        expect(op.rows() == dim && op.cols() == dim, "operator shape does not match module dimension");
    const Matrix id = Matrix::identity(dim);
    switch (group.kind) {
        case GroupKind::SL2: {
            expect(ops.size() == 3, "SL2 module needs E, H, F");
            const auto &E = ops[0], &H = ops[1], &F = ops[2];
            expect(commutator(E, F) == H, "[E,F] != H");
            expect(commutator(H, E) == E.scaled(2), "[H,E] != 2E");
            expect(commutator(H, F) == F.scaled(-2), "[H,F] != -2F");
            break;
        }
        case GroupKind::GL: {
            const int k = group.k;
            expect(ops.size() == std::size_t(k * k), "GL module needs k^2 operators");
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    for (int c = 0; c < k; ++c)
                        for (int d = 0; d < k; ++d) {
                            Matrix expected(dim, dim);
                            if (b == c) expected = expected + ops[a * k + d];
                            if (d == a) expected = expected - ops[c * k + b];
                            expect(commutator(ops[a * k + b], ops[c * k + d]) == expected,
                                   "gl(k) relations fail");
                        }
            break;
        }
        case GroupKind::S3: {
            expect(ops.size() == 2, "S3 module needs (12) and (123)");
            const auto &s = ops[0], &t = ops[1];
            expect(s * s == id, "(12)^2 != 1");
            expect(t * t * t == id, "(123)^3 != 1");
            expect((s * t) * (s * t) == id, "((12)(123))^2 != 1");
            break;
        }
    }
    if (!basis_names.empty()) expect(basis_names.size() == dim, "basis name count mismatch");
}

GModule tensor_module(const GModule& a, const GModule& b) {
    if (a.group != b.group || a.ops.size() != b.ops.size())
        throw InvalidModule("tensor product of modules over different groups");
    GModule t{a.group, a.dim * b.dim, {}, {}};
    const Matrix ia = Matrix::identity(a.dim), ib = Matrix::identity(b.dim);
    for (std::size_t g = 0; g < a.ops.size(); ++g) {
        if (a.group.derivation_action())
            t.ops.push_back(kron(a.ops[g], ib) + kron(ia, b.ops[g]));
        else
            t.ops.push_back(kron(a.ops[g], b.ops[g]));
    }
    return t;
}

// ---------------------------------------------------------------- bilinear maps

Bilinear::Bilinear(std::size_t left, std::size_t right, Matrix coeffs)
    : left_(left), right_(right), coeffs_(std::move(coeffs)) {
    if (coeffs_.cols() != left * right) throw DimensionError("bilinear map shape mismatch");
}

void Bilinear::set_on_basis(std::size_t i, std::size_t j, const Vector& v) {
    for (std::size_t k = 0; k < v.size(); ++k) coeffs_(k, i * right_ + j) = v[k];
}

Vector Bilinear::apply(const Vector& a, const Vector& b) const {
    if (a.size() != left_ || b.size() != right_) throw DimensionError("bilinear argument mismatch");
    Vector r(out_dim());
    for (std::size_t i = 0; i < left_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < right_; ++j) {
            if (b[j] == 0) continue;
            Scalar w = a[i] * b[j];
            for (std::size_t k = 0; k < out_dim(); ++k) {
                const Scalar& c = coeffs_(k, i * right_ + j);
                if (c != 0) r[k] += w * c;
            }
        }
    }
    return r;
}

Bilinear Bilinear::transformed(const Matrix& out_map, const Matrix& left_map,
                               const Matrix& right_map) const {
    Bilinear r(left_map.cols(), right_map.cols(), out_map.rows());
    for (std::size_t i = 0; i < left_map.cols(); ++i) {
        Vector a = left_map.column(i);
        for (std::size_t j = 0; j < right_map.cols(); ++j)
            r.set_on_basis(i, j, out_map * apply(a, right_map.column(j)));
    }
    return r;
}

bool is_equivariant(const Bilinear& m, const GModule& left, const GModule& right,
                    const GModule& out) {
    if (left.ops.size() != right.ops.size() || left.ops.size() != out.ops.size()) return false;
    for (std::size_t g = 0; g < left.ops.size(); ++g) {
        for (std::size_t i = 0; i < left.dim; ++i) {
            Vector a = left.ops[g].column(i);
            for (std::size_t j = 0; j < right.dim; ++j) {
                Vector b = right.ops[g].column(j);
                Vector lhs = out.ops[g] * m.on_basis(i, j);
                Vector rhs;
                if (left.group.derivation_action())
                    rhs = la::add(m.apply(a, la::unit_vector(right.dim, j)),
                                  m.apply(la::unit_vector(left.dim, i), b));
                else
                    rhs = m.apply(a, b);
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- registry

void Registry::add_model(ModelIrrep m) {
    if (m.id.group != group_) throw InvalidModule("model group differs from registry group");
    models_.insert_or_assign(m.id, std::move(m));
}

void Registry::add_map(const IrrepId& a, const IrrepId& b, const IrrepId& c, Bilinear m) {
    const auto &ma = model(a), &mb = model(b), &mc = model(c);
    if (m.left_dim() != ma.dim() || m.right_dim() != mb.dim() || m.out_dim() != mc.dim())
        throw DimensionError("intertwiner shape does not match models");
    maps_[Triple{a, b, c}].push_back(std::move(m));
}

const ModelIrrep& Registry::model(const IrrepId& id) const {
    auto it = models_.find(id);
    if (it == models_.end()) throw UnknownIrrep(id.name() + " not in labeling " + name_);
    return it->second;
}

std::vector<IrrepId> Registry::irreps() const {
    std::vector<IrrepId> out;
    for (const auto& [id, m] : models_) out.push_back(id);
    return out;
}

const std::vector<Bilinear>& Registry::maps(const IrrepId& a, const IrrepId& b,
                                            const IrrepId& c) const {
    static const std::vector<Bilinear> none;
    auto it = maps_.find(Triple{a, b, c});
    return it == maps_.end() ? none : it->second;
}

Registry builtin_labeling(const Group& g) {
    switch (g.kind) {
        case GroupKind::SL2: return sl2_first_labeling();
        case GroupKind::GL: return gl_labeling(g.k);
        case GroupKind::S3: return s3_labeling();
    }
    throw ParseError("unknown group");
}

// ---------------------------------------------------------------- S3 helpers

const std::vector<Perm>& s3_elements() {
    static const std::vector<Perm> els = {
        Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{0, 2, 1}, Perm{2, 1, 0}, Perm{1, 2, 0}, Perm{2, 0, 1}};
    return els;
}

Perm compose(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }

int perm_sign(const Perm& p) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

Matrix s3_element_action(const GModule& m, std::size_t element) {
    const Perm gens[2] = {s3_elements()[1], s3_elements()[4]};
    const Perm target = s3_elements().at(element);
    std::deque<std::pair<Perm, Matrix>> queue{{s3_elements()[0], Matrix::identity(m.dim)}};
    std::vector<Perm> seen{s3_elements()[0]};
    while (!queue.empty()) {
        auto [p, mat] = queue.front();
        queue.pop_front();
        if (p == target) return mat;
        for (int g = 0; g < 2; ++g) {
            Perm q = compose(gens[g], p);
            if (std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
            seen.push_back(q);
            queue.emplace_back(q, m.ops[g] * mat);
        }
    }
    throw InvalidModule("S3 element not generated");
}

// ---------------------------------------------------------------- decompositions

Matrix Decomposition::basis_matrix() const {
    std::vector<Vector> cols;
    for (const auto& s : summands)
        for (std::size_t j = 0; j < s.tau.cols(); ++j) cols.push_back(s.tau.column(j));
    return Matrix::from_columns(cols, module_dim);
}

std::vector<std::size_t> Decomposition::offsets() const {
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (const auto& s : summands) {
        off.push_back(o);
        o += s.tau.cols();
    }
    return off;
}

void Decomposition::validate(const GModule& m, const Registry& reg) const {
    expect(m.dim == module_dim, "decomposition dimension differs from module");
    std::size_t total = 0;
    for (const auto& s : summands) {
        const ModelIrrep& model = reg.model(s.irrep);
        expect(s.tau.rows() == m.dim && s.tau.cols() == model.dim(), "tau shape mismatch for " + s.id);
        for (std::size_t g = 0; g < m.ops.size(); ++g)
            expect(m.ops[g] * s.tau == s.tau * model.module.ops[g], "tau is not equivariant for " + s.id);
        total += model.dim();
    }
    expect(total == module_dim, "summand dimensions do not add up to the module dimension");
    expect(la::rank(basis_matrix()) == module_dim, "summand images are not independent");
}

std::vector<WeightSpace> highest_weight_vectors(const GModule& m) {
    if (m.group.kind != GroupKind::SL2) throw InvalidModule("highest weights need an SL2 module");
    const Matrix &E = m.ops.at(0), &H = m.ops.at(1);
    const int bound = int(m.dim);
    std::size_t found = 0;
    std::vector<WeightSpace> out;
    for (int w = -bound; w <= bound; ++w) {
        Matrix shifted = H - Matrix::identity(m.dim).scaled(w);
        std::size_t mult = la::kernel(shifted).dim();
        found += mult;
        if (w < 0 || mult == 0) continue;
        Matrix stacked(2 * m.dim, m.dim);
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) {
                stacked(i, j) = E(i, j);
                stacked(m.dim + i, j) = shifted(i, j);
            }
        auto k = la::kernel(stacked);
        if (k.dim()) out.push_back({w, k.basis()});
    }
    if (found != m.dim)
        throw NonDiagonalizableH("H has " + std::to_string(found) + " integer eigenvectors in dimension " +
                                 std::to_string(m.dim));
    return out;
}

Matrix sl2_extend(const GModule& m, const ModelIrrep& model, const Vector& w) {
    const std::size_t d = model.dim();
    std::vector<Vector> vs, ws;
    Vector v = model.hwv, x = w;
    for (std::size_t j = 0; j < d; ++j) {
        vs.push_back(v);
        ws.push_back(x);
        v = model.module.ops[2] * v;
        x = m.ops[2] * x;
    }
    return Matrix::from_columns(ws, m.dim) * la::inverse(Matrix::from_columns(vs, d));
}

namespace {

int weight_of(const GModule& m, const Vector& w, const std::string& id) {
    expect(!la::is_zero(w), "highest weight vector " + id + " is zero");
    expect(la::is_zero(m.ops[0] * w), "vector " + id + " is not annihilated by E");
    Vector hw = m.ops[1] * w;
    std::size_t i = 0;
    while (w[i] == 0) ++i;
    Scalar n = hw[i] / w[i];
    expect(la::scale(n, w) == hw, "vector " + id + " is not an H eigenvector");
    expect(n.get_den() == 1 && n >= 0, "vector " + id + " has a non-dominant weight");
    return int(n.get_num().get_si());
}

}  // namespace

Decomposition decompose_sl2(const GModule& m, const Registry& reg,
                            const std::optional<std::vector<HwvChoice>>& hwvs) {
    m.validate();
    std::vector<HwvChoice> choices;
    if (hwvs) {
        choices = *hwvs;
    } else {
        for (const auto& ws : highest_weight_vectors(m))
            for (std::size_t k = 0; k < ws.hwvs.size(); ++k)
                choices.push_back({"V_" + std::to_string(ws.weight) + std::string(k, '\''), ws.hwvs[k]});
    }
    Decomposition dec{Group::sl2(), m.dim, {}};
    for (const auto& c : choices) {
        int n = weight_of(m, c.vector, c.id);
        IrrepId id{Group::sl2(), n};
        const ModelIrrep& model = reg.model(id);
        dec.summands.push_back({c.id, id, n, sl2_extend(m, model, c.vector)});
    }
    dec.validate(m, reg);
    return dec;
}

Decomposition decompose_s3(const GModule& m, const Registry& reg) {
    m.validate();
    const auto& els = s3_elements();
    std::vector<Matrix> rho;
    for (std::size_t g = 0; g < els.size(); ++g) rho.push_back(s3_element_action(m, g));
    auto inverse_index = [&](std::size_t g) {
        for (std::size_t h = 0; h < els.size(); ++h)
            if (compose(els[g], els[h]) == els[0]) return h;
        return std::size_t(0);
    };

    Decomposition dec{Group::s3(), m.dim, {}};
    const char* names[] = {"tr", "sg"};
    for (int label : {kTr, kSg}) {
        Matrix p(m.dim, m.dim);
        for (std::size_t g = 0; g < els.size(); ++g) {
            int chi = label == kTr ? 1 : perm_sign(els[g]);
            p = p + rho[g].scaled(la::ratio(chi, 6));
        }
        auto img = la::image(p);
        for (std::size_t k = 0; k < img.dim(); ++k)
            dec.summands.push_back({std::string(names[label]) + std::string(k, '\''),
                                    IrrepId{Group::s3(), label}, std::nullopt,
                                    Matrix::from_columns({img.basis()[k]}, m.dim)});
    }

    const ModelIrrep& std_model = reg.model(IrrepId{Group::s3(), kStd});
    Matrix p11(m.dim, m.dim), p21(m.dim, m.dim);
    for (std::size_t g = 0; g < els.size(); ++g) {
        Matrix pi_inv = s3_element_action(std_model.module, inverse_index(g));
        p11 = p11 + rho[g].scaled(pi_inv(0, 0) / 3);
        p21 = p21 + rho[g].scaled(pi_inv(0, 1) / 3);
    }
    auto img = la::image(p11);
    for (std::size_t k = 0; k < img.dim(); ++k) {
        const Vector& v = img.basis()[k];
        dec.summands.push_back({"std" + std::string(k, '\''), IrrepId{Group::s3(), kStd}, std::nullopt,
                                Matrix::from_columns({v, p21 * v}, m.dim)});
    }
    dec.validate(m, reg);
    return dec;
}

}  // namespace gtable::rep
