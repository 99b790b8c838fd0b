#pragma once

#include "gtable/repkit.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gtable {
GTABLE_ERROR(NotEquivariant);
GTABLE_ERROR(InconsistentSystem);
GTABLE_ERROR(AmbiguousSystem);
GTABLE_ERROR(ShapeMismatch);
GTABLE_ERROR(MissingChoice);

using la::Matrix;
using la::Scalar;
using la::Vector;

struct SummandInfo {
    std::string id;
    rep::IrrepId irrep;
    std::optional<int> hwv_weight;
    bool operator==(const SummandInfo&) const = default;
};

std::vector<SummandInfo> summand_infos(const rep::Decomposition& dec);

struct TableEntry {
    std::size_t s;  // index into the target summands
    int q;          // 1-based intertwiner index
    Scalar c;
    bool operator==(const TableEntry&) const = default;
};

class GTable {
public:
    using Cell = std::vector<TableEntry>;

    GTable() = default;
    GTable(rep::Group group, std::string labeling, std::vector<SummandInfo> source,
           std::vector<SummandInfo> target)
        : group_(group), labeling_(std::move(labeling)), source_(std::move(source)),
          target_(std::move(target)) {}

    const rep::Group& group() const { return group_; }
    const std::string& labeling() const { return labeling_; }
    const std::vector<SummandInfo>& source() const { return source_; }
    const std::vector<SummandInfo>& target() const { return target_; }
    const std::map<std::pair<std::size_t, std::size_t>, Cell>& entries() const { return entries_; }

    const Cell& cell(std::size_t r1, std::size_t r2) const;
    Scalar coefficient(std::size_t r1, std::size_t r2, std::size_t s, int q = 1) const;
    // Adds c to the coefficient; zero results are dropped.
    void add(std::size_t r1, std::size_t r2, std::size_t s, int q, const Scalar& c);
    std::size_t source_index(std::string_view id) const;
    std::size_t target_index(std::string_view id) const;
    bool empty() const { return entries_.empty(); }
    bool operator==(const GTable&) const = default;

private:
    rep::Group group_;
    std::string labeling_;
    std::vector<SummandInfo> source_, target_;
    std::map<std::pair<std::size_t, std::size_t>, Cell> entries_;
};

// Throws NotEquivariant unless the product commutes with the action on every basis pair.
void check_equivariant(const rep::GModule& m, const rep::Bilinear& product);

GTable extract(const rep::GModule& m, const rep::Bilinear& product, const rep::Decomposition& dec,
               const rep::Registry& reg, const rep::Decomposition* target_dec = nullptr);

// Structure constants on the concatenated model bases of the summands.
rep::Bilinear expand(const GTable& t, const rep::Registry& reg);

// The direct sum of the model irreducibles, and its decomposition into the blocks.
rep::GModule model_module(const std::vector<SummandInfo>& summands, const rep::Registry& reg);
rep::Decomposition model_decomposition(const std::vector<SummandInfo>& summands, const rep::Registry& reg);

// f_{x,r}: x indexes target summands, r source summands.
class GMatrix {
public:
    GMatrix() = default;
    GMatrix(std::vector<SummandInfo> source, std::vector<SummandInfo> target)
        : source_(std::move(source)), target_(std::move(target)) {}
    static GMatrix identity(const std::vector<SummandInfo>& summands);

    const std::vector<SummandInfo>& source() const { return source_; }
    const std::vector<SummandInfo>& target() const { return target_; }
    const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const { return entries_; }
    Scalar at(std::size_t x, std::size_t r) const;
    void set(std::size_t x, std::size_t r, const Scalar& c);
    // Throws ShapeMismatch when a nonzero entry links summands of different types.
    void validate() const;
    bool operator==(const GMatrix&) const = default;

private:
    std::vector<SummandInfo> source_, target_;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
};

bool check_morphism(const GTable& a, const GTable& b, const GMatrix& f);

// The linear map between the concatenated model bases determined by f.
Matrix assemble_map(const GMatrix& f, const rep::Registry& reg);
bool is_algebra_morphism(const rep::Bilinear& a, const rep::Bilinear& b, const Matrix& phi);

using ChoiceQ = std::map<rep::Triple, int>;

// Choices for every triple with a single intertwiner; triples with more are left to the caller.
ChoiceQ forced_choices(const rep::Registry& reg);
// Every choice function over the triples of the registry.
std::vector<ChoiceQ> all_choices(const rep::Registry& reg);

struct PlainAlgebra {
    std::vector<std::string> ids;
    rep::Bilinear constants;
};

PlainAlgebra plain_algebra(const GTable& t, const ChoiceQ& q);
Matrix plain_map(const GMatrix& f);
bool corollary_check(const GTable& a, const GTable& b, const GMatrix& f, const rep::Registry& reg);

// coproduct: (dim*dim) x dim, column k holds Delta(e_k) in the lexicographic basis.
GTable cotable(const rep::GModule& dual_module, const Matrix& coproduct, const rep::Decomposition& dec,
               const rep::Registry& reg);

enum class Format { Text, Json, Latex };
Format parse_format(std::string_view name);

std::string render(const GTable& t, Format format, std::string_view op_symbol = "·");
std::string to_json(const GTable& t);
GTable parse_json(std::string_view text);
// Text of one cell, e.g. "1/2 H_2^{1,1} - 1/2 H_0^{1,1}"; empty when the cell is zero.
std::string cell_text(const GTable& t, std::size_t r1, std::size_t r2, bool latex = false);

}  // namespace gtable
