#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vsr/finsler_kernel.hpp"
#include "vsr/metric_builder.hpp"

namespace vsr {

/// One golden-vs-computed row of Tables I-III.
struct TableRow {
  std::string table;     // "I", "II" or "III"
  std::string group;     // display name
  std::string expected;  // golden record summary
  std::string computed;  // pipeline output summary
  std::string status;    // match | mismatch | discrepancy-noted
  std::string note;
};

/// Recomputes every row of Tables I-III from the pipeline at the recorded
/// sampled parameters. Exactly two rows carry recorded discrepancies
/// between the printed tables and the recomputed values.
std::vector<TableRow> reproduce_tables();

nlohmann::ordered_json tables_to_json(const std::vector<TableRow>& rows);
std::string tables_to_markdown(const std::vector<TableRow>& rows);

/// True iff no row has status "mismatch".
bool tables_pass(const std::vector<TableRow>& rows);

/// One assembled invariant metric family at the recorded sampled
/// parameters, ready for numerical validation. `s` is the sampled scalar
/// function for metrics carrying a zero-degree modifier, empty otherwise.
struct TableMetric {
  std::string name;
  GroupInstance group;
  MetricSpec spec;
  ScalarFn s;
};

/// Every feasible Table III metric family.
std::vector<TableMetric> table_three_metrics();

/// Max over seeded (θ, generator, y) samples of
/// |F²(exp(θ·lin)y) − F²(y)| / |F²(y)|; domain-restricted sampling.
double max_invariance_residual(const GroupInstance& g, const MetricSpec& spec,
                               int samples, unsigned seed,
                               const ScalarFn& s = {});

/// Max over seeded y samples of |g_{μν}y^μy^ν − F²| / |F²|.
double max_gyy_residual(const MetricSpec& spec, int samples, unsigned seed,
                        const ScalarFn& s = {});

}  // namespace vsr
