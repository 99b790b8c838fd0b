#pragma once

#include "gtable/exactla.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gtable {
GTABLE_ERROR(NonDiagonalizableH);
GTABLE_ERROR(InvalidModule);
GTABLE_ERROR(UnknownIrrep);
}  // namespace gtable

namespace gtable::rep {

using la::Matrix;
using la::Scalar;
using la::Vector;

enum class GroupKind { SL2, GL, S3 };

struct Group {
    GroupKind kind = GroupKind::SL2;
    int k = 0;  // rank for GL, unused otherwise

    static Group sl2() { return {GroupKind::SL2, 0}; }
    static Group gl(int k) { return {GroupKind::GL, k}; }
    static Group s3() { return {GroupKind::S3, 0}; }

    std::string name() const;  // "SL2", "GL3", "S3"
    static Group parse(const std::string& name);

    // Lie-type groups act through derivations of the Lie algebra, S3 through group elements.
    bool derivation_action() const { return kind != GroupKind::S3; }
    auto operator<=>(const Group&) const = default;
};

// GL labels and S3 labels are small integers; see the constants below.
inline constexpr int kTrivial = 0, kAdjoint = 1;
inline constexpr int kTr = 0, kSg = 1, kStd = 2;

struct IrrepId {
    Group group;
    int label = 0;

    std::string label_name() const;  // "3", "adjoint", "std", ...
    std::string name() const;        // "V_3", "GL3:adjoint", "S3:std"
    auto operator<=>(const IrrepId&) const = default;
};

// Action operators on a finite-dimensional space.
//   SL2: {E, H, F}
//   GL(k): the k*k elementary matrices E_ab in row-major order, acting by derivations
//   S3: the transposition (12) and the cycle (123)
struct GModule {
    Group group;
    std::size_t dim = 0;
    std::vector<Matrix> ops;
    std::vector<std::string> basis_names;

    // Throws InvalidModule when the defining relations fail.
    void validate() const;
};

struct ModelIrrep {
    IrrepId id;
    GModule module;
    Vector hwv;  // SL2 only
    std::size_t dim() const { return module.dim; }
};

// Bilinear map K^left x K^right -> K^out stored as an out x (left*right) matrix;
// column i*right + j holds the image of (e_i, e_j).
class Bilinear {
public:
    Bilinear() = default;
    Bilinear(std::size_t left, std::size_t right, std::size_t out)
        : left_(left), right_(right), coeffs_(out, left * right) {}
    Bilinear(std::size_t left, std::size_t right, Matrix coeffs);

    std::size_t left_dim() const { return left_; }
    std::size_t right_dim() const { return right_; }
    std::size_t out_dim() const { return coeffs_.rows(); }
    const Matrix& coeffs() const { return coeffs_; }

    Scalar& at(std::size_t k, std::size_t i, std::size_t j) { return coeffs_(k, i * right_ + j); }
    const Scalar& at(std::size_t k, std::size_t i, std::size_t j) const {
        return coeffs_(k, i * right_ + j);
    }
    Vector on_basis(std::size_t i, std::size_t j) const { return coeffs_.column(i * right_ + j); }
    void set_on_basis(std::size_t i, std::size_t j, const Vector& v);
    Vector apply(const Vector& a, const Vector& b) const;

    // Precomposition with linear maps on each side and postcomposition on the output.
    Bilinear transformed(const Matrix& out_map, const Matrix& left_map, const Matrix& right_map) const;
    bool operator==(const Bilinear& o) const = default;

private:
    std::size_t left_ = 0, right_ = 0;
    Matrix coeffs_;
};

// True when g.m(a,b) agrees with m(g.a,b)+m(a,g.b) (derivation action) or m(g.a,g.b)
// (group action) on all basis pairs and operators.
bool is_equivariant(const Bilinear& m, const GModule& left, const GModule& right,
                    const GModule& out);

struct Triple {
    IrrepId left, right, out;
    auto operator<=>(const Triple&) const = default;
};

class Registry {
public:
    Registry(Group group, std::string name) : group_(group), name_(std::move(name)) {}

    const Group& group() const { return group_; }
    const std::string& name() const { return name_; }

    void add_model(ModelIrrep m);
    void add_map(const IrrepId& a, const IrrepId& b, const IrrepId& c, Bilinear m);

    bool has_model(const IrrepId& id) const { return models_.count(id) != 0; }
    const ModelIrrep& model(const IrrepId& id) const;
    std::vector<IrrepId> irreps() const;
    const std::vector<Bilinear>& maps(const IrrepId& a, const IrrepId& b, const IrrepId& c) const;
    std::size_t multiplicity(const IrrepId& a, const IrrepId& b, const IrrepId& c) const {
        return maps(a, b, c).size();
    }
    const std::map<Triple, std::vector<Bilinear>>& all_maps() const { return maps_; }

private:
    Group group_;
    std::string name_;
    std::map<IrrepId, ModelIrrep> models_;
    std::map<Triple, std::vector<Bilinear>> maps_;
};

// Models V_0 = K, V_1 = K^2, V_2 = sl(2) with basis (E, H, F).
Registry sl2_first_labeling();
// Models K[x,y]_r for r <= max_degree with monomial basis x^r, x^{r-1}y, ..., y^r.
Registry sl2_poly_labeling(int max_degree);
// Trivial line and the adjoint module sl(k) in the coordinates of adjoint_coords.
Registry gl_labeling(int k);
Registry s3_labeling();
Registry builtin_labeling(const Group& g);

// Coordinates on sl(k): off-diagonal E_ij in row-major order, then E_ii - E_{i+1,i+1}.
Matrix adjoint_basis_matrix(int k, std::size_t index);
Vector adjoint_coords(const Matrix& traceless);
// The operator matrices of E_ab acting by commutator on sl(k) coordinates.
std::vector<Matrix> gl_adjoint_ops(int k);
Matrix elementary(int k, int a, int b);

// S3 elements in the order (), (12), (23), (13), (123), (132), as images of i -> p[i].
using Perm = std::array<int, 3>;
const std::vector<Perm>& s3_elements();
Perm compose(const Perm& a, const Perm& b);  // a after b
int perm_sign(const Perm& p);
// Action matrix of a group element in a module given by its generator matrices.
Matrix s3_element_action(const GModule& m, std::size_t element);

struct Summand {
    std::string id;
    IrrepId irrep;
    std::optional<int> hwv_weight;
    Matrix tau;  // module_dim x model_dim
};

struct Decomposition {
    Group group;
    std::size_t module_dim = 0;
    std::vector<Summand> summands;

    // Concatenated images of the model bases, as columns.
    Matrix basis_matrix() const;
    std::vector<std::size_t> offsets() const;
    // Throws InvalidModule when a map is not equivariant or the images do not
    // form a direct sum decomposition.
    void validate(const GModule& m, const Registry& reg) const;
};

struct WeightSpace {
    int weight;
    std::vector<Vector> hwvs;
};

// Highest weight vectors grouped by weight in increasing order.
std::vector<WeightSpace> highest_weight_vectors(const GModule& m);

struct HwvChoice {
    std::string id;
    Vector vector;
};

// One summand per highest weight vector. Without explicit choices the summands follow
// increasing weight with the echelon kernel basis inside each weight.
Decomposition decompose_sl2(const GModule& m, const Registry& reg,
                            const std::optional<std::vector<HwvChoice>>& hwvs = std::nullopt);

Decomposition decompose_s3(const GModule& m, const Registry& reg);

// Equivariant map from an SL2 model into m sending v-bar to w.
Matrix sl2_extend(const GModule& m, const ModelIrrep& model, const Vector& w);

GModule tensor_module(const GModule& a, const GModule& b);

}  // namespace gtable::rep
