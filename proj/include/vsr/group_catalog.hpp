#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vsr/errors.hpp"
#include "vsr/exact_linalg.hpp"
#include "vsr/rational.hpp"

namespace vsr {

/// The semi-direct-product Poincaré subgroups and their deformed partners.
/// DTE2b is a catalog stub with no natural 5-d representation; DTE3a is
/// representation-identical to DTE2a and not listed separately.
enum class GroupId {
  deSitter,
  Poincare,
  DISIM,
  DISIMb,
  XDISIM1,
  XDISIM2,
  ISIM,
  DIHOM,
  WDIHOM,
  IHOM,
  DTE1,
  DTE2a,
  DTE2b,
  DTE3b,
  IE2_TE2,
  DISO3_1,
  DISO3_2,
  ISO3,
  DISO21_1,
  DISO21_2,
  ISO21,
};

std::string group_name(GroupId id);
GroupId group_from_name(const std::string& name);  // throws invalid_argument

enum class GeneratorKind {
  rotation,
  boost,
  null_translation,
  spacetime_translation,
};

std::string kind_name(GeneratorKind k);

/// One generator in the 5-d natural representation: 4×4 linear block,
/// translation column (col 4), and—in the de Sitter / DIHOM cases—nonzero
/// bottom-row entries, transcribed exactly as printed.
struct Generator {
  std::string symbol;
  GeneratorKind kind;
  RatMatrix matrix;  // 5×5

  bool operator==(const Generator&) const = default;
};

struct DeformationParams {
  std::map<std::string, Rat> assignments;
};

struct GroupDescriptor {
  GroupId id;
  std::string name;
  std::vector<std::string> param_symbols;
  int rep_count;  // 0 marks the no-representation stub (DTE2b)
};

/// Complete, stable-ordered catalog.
std::vector<GroupDescriptor> list_groups();

struct GroupInstance {
  GroupId id = GroupId::Poincare;
  int rep_variant = 1;
  DeformationParams params;
  std::vector<Generator> generators;
};

/// Builds the group at exact rational parameter values.
/// Throws MissingParameter, ConstraintViolated, NoRepresentation.
GroupInstance instantiate(GroupId id, const DeformationParams& params,
                          int rep_variant = 1);

/// Upper-left 4×4 block: the infinitesimal action on tangent coordinates.
RatMatrix linear_part(const Generator& g);
/// Translation column (entries (0..3, 4)).
RatVec translation_column(const Generator& g);
/// Bottom-row 4-vector (entries (4, 0..3)); nonzero only for de Sitter
/// (and printed verbatim for DIHOM).
RatVec bottom_row(const Generator& g);

/// exp(θ·M) for a square double matrix, scaling-and-squaring + Taylor.
std::vector<double> mat_exp(const std::vector<double>& m, std::size_t n);

/// exp(θ·matrix(g)) as a 5×5 row-major double matrix.
std::vector<double> one_parameter_element(const Generator& g, double theta);

/// Bit-exact JSON round trip (rationals as "num/den" strings).
nlohmann::ordered_json to_json(const GroupInstance& g);
GroupInstance instance_from_json(const nlohmann::ordered_json& j);

}  // namespace vsr
