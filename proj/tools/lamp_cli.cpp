// Command-line front end: word-metric checks, embedding distortion,
// representation lower bounds, the zig-zag spectral pipeline, the
// Abelian L_p pipeline, and Gram symmetrization.  Every run embeds its
// configuration in the JSON report; payloads are deterministic for a
// fixed config (timestamps live in a separate header field).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamp/abelian.hpp"
#include "lamp/analysis.hpp"
#include "lamp/embedding.hpp"
#include "lamp/lower_bounds.hpp"
#include "lamp/word_metric.hpp"

using json = nlohmann::json;
using namespace lamp;

namespace {

constexpr int kSchemaVersion = 1;

struct Global {
  std::uint64_t seed = 0;
  std::uint32_t threads = 0;
  std::string out;
};

void emit(const json& config, json payload, const Global& g) {
  json doc;
  doc["header"] = {
      {"schema_version", kSchemaVersion},
      {"timestamp",
       std::chrono::duration_cast<std::chrono::seconds>(
           std::chrono::system_clock::now().time_since_epoch())
           .count()},
  };
  doc["config"] = config;
  doc["payload"] = std::move(payload);
  if (g.out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot open output file " + g.out);
    f << doc.dump(2) << "\n";
  }
}

json report_json(const DistortionReport& r) {
  return {
      {"expansion", r.expansion},
      {"contraction", r.contraction},
      {"distortion", r.distortion},
      {"expansion_witness", {r.expansion_witness.first, r.expansion_witness.second}},
      {"contraction_witness",
       {r.contraction_witness.first, r.contraction_witness.second}},
      {"pairs_visited", r.pairs_visited},
  };
}

int run_word_metric_check(std::uint32_t n, const std::vector<std::uint32_t>& S,
                          const Global& g) {
  GeneratorSet gens = S.empty() ? GeneratorSet::standard()
                                : GeneratorSet{S, true};
  const WordMetricTable table = bfs_table(n, gens);
  const bool standard = S.empty() || (S.size() == 1 && S[0] == 1);

  bool oracle_ok = true;
  double band_min = std::numeric_limits<double>::infinity(), band_max = 0.0;
  std::uint64_t lamp_violations = 0;
  for (std::uint64_t i = 0; i < group_order(n); ++i) {
    const GroupElement e = element_from_index(i, n);
    const std::uint32_t rho = table.dist[i];
    if (standard && rho != exact_travel_metric(e.lamps, e.pos, n))
      oracle_ok = false;
    if (rho < static_cast<std::uint32_t>(std::popcount(e.lamps)))
      ++lamp_violations;
    if (i != 0) {
      const double ratio =
          static_cast<double>(rho) / surrogate_sigma(e, identity(), n);
      band_min = std::min(band_min, ratio);
      band_max = std::max(band_max, ratio);
    }
  }
  json payload = {
      {"n", n},
      {"elements", group_order(n)},
      {"travel_oracle_applicable", standard},
      {"travel_oracle_equivalent", standard ? json(oracle_ok) : json()},
      {"surrogate_ratio_min", band_min},
      {"surrogate_ratio_max", band_max},
      {"lamp_lower_bound_violations", lamp_violations},
  };
  json config = {{"subcommand", "word-metric-check"},
                 {"n", n},
                 {"gens", S},
                 {"seed", g.seed},
                 {"threads", g.threads}};
  emit(config, payload, g);
  return standard && !oracle_ok ? 1 : 0;
}

int run_embed_distortion(std::uint32_t n, double alpha,
                         std::optional<double> eta,
                         std::optional<double> delta, std::uint64_t sample,
                         const Global& g) {
  EmbeddingParams params = EmbeddingParams::defaults(n);
  params.alpha = alpha;
  if (eta && delta) params = EmbeddingParams::with_raw(n, *eta, *delta, alpha);
  const ArcEmbedding emb(params);

  PairOracle metric = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<double>(travel_pair_distance(
        element_from_index(a, n), element_from_index(b, n), n));
  };
  PairOracle edist = [&emb, n](std::uint64_t a, std::uint64_t b) {
    return std::sqrt(
        emb.pair_sq_dist(element_from_index(a, n), element_from_index(b, n)));
  };

  DistortionReport rep;
  json extra;
  if (sample == 0) {
    // Exact: the reduced scan is valid because the metric is invariant
    // and the embedding equivariant.
    rep = distortion_scan(metric, edist, group_order(n), ScanMode::reduced(),
                          g.threads);
  } else {
    // The expansion of an equivariant embedding against a word metric is
    // attained on generator displacements, so it is exact even when the
    // contraction side is sampled.
    rep = distortion_scan(metric, edist, group_order(n),
                          ScanMode::sampled(sample, g.seed), g.threads);
    const double exp_exact = emb.generator_expansion(
        GeneratorSet::standard().symmetrized(n));
    extra["sampled_expansion"] = rep.expansion;
    rep.expansion = std::max(rep.expansion, exp_exact);
    rep.distortion = rep.expansion * rep.contraction;
  }
  json payload = report_json(rep);
  payload["ratio_to_sqrt_log_n"] = rep.distortion / std::sqrt(std::log(n));
  for (auto& [k, v] : extra.items()) payload[k] = v;
  json config = {{"subcommand", "embed-distortion"},
                 {"n", n},
                 {"alpha", alpha},
                 {"eta", eta ? json(*eta) : json()},
                 {"delta", delta ? json(*delta) : json()},
                 {"sample", sample},
                 {"seed", g.seed},
                 {"threads", g.threads}};
  emit(config, payload, g);
  return 0;
}

int run_lower_bound(std::uint32_t n, const std::vector<std::uint32_t>& S,
                    std::uint64_t sample, const Global& g) {
  GeneratorSet gens = S.empty() ? GeneratorSet::standard()
                                : GeneratorSet{S, true};
  const auto irreps = standard_irrep_list(n, gens);
  json per_irrep = json::array();
  for (const auto& ir : irreps) {
    json entry;
    if (ir.label.kind == RepLabel::Kind::Character)
      entry["label"] = "character_" + std::to_string(ir.label.u);
    else
      entry["label"] = "walsh_" + std::to_string(ir.label.subset);
    entry["rayleigh_min"] = rayleigh_min(ir);
    per_irrep.push_back(entry);
  }
  double bound;
  bool exact;
  if (n <= kBfsMaxN && sample == 0) {
    bound = lemma32_bound(bfs_table(n, gens), gens, irreps);
    exact = true;
  } else {
    const std::uint64_t count = sample == 0 ? 200000 : sample;
    bound = lemma32_bound_sampled(n, gens, irreps, count, g.seed);
    exact = false;
  }
  json payload = {{"n", n},
                  {"bound", bound},
                  {"exact_mean", exact},
                  {"rayleigh", per_irrep}};
  json config = {{"subcommand", "lower-bound"},
                 {"n", n},
                 {"gens", S},
                 {"sample", sample},
                 {"seed", g.seed},
                 {"threads", g.threads}};
  emit(config, payload, g);
  return 0;
}

int run_zigzag(std::uint32_t n, std::uint32_t count, std::uint32_t seeds,
               const std::string& mode, const Global& g) {
  const RhoSource src =
      mode == "exact" ? RhoSource::ExactTable : RhoSource::LampEstimate;
  json rows = json::array();
  for (std::uint32_t i = 0; i < seeds; ++i) {
    const std::uint64_t seed = g.seed + i;
    const auto S = sample_generators(n, count, seed);
    const SpectralReport r = prop34_bound(n, S, src);
    rows.push_back({{"seed", seed},
                    {"lambda1", r.lambda1},
                    {"lambda2", r.lambda2},
                    {"lambda", r.lambda},
                    {"avg_rho_sq", r.avg_rho_sq},
                    {"d_lower", r.d_lower},
                    {"exact", r.exact},
                    {"degenerate", r.degenerate}});
  }
  json payload = {{"n", n}, {"count", count}, {"rows", rows}};
  json config = {{"subcommand", "zigzag"}, {"n", n},
                 {"count", count},         {"seeds", seeds},
                 {"mode", mode},           {"seed", g.seed},
                 {"threads", g.threads}};
  emit(config, payload, g);
  return 0;
}

std::vector<double> load_metric_file(const AbelianGroupSpec& spec,
                                     const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open metric file " + path);
  std::vector<double> F(spec.order, -1.0);
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::vector<std::uint32_t> coords;
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != spec.moduli.size() + 1)
      throw std::runtime_error("metric file row has wrong arity: " + line);
    for (std::size_t i = 0; i + 1 < fields.size(); ++i)
      coords.push_back(static_cast<std::uint32_t>(std::stoul(fields[i])));
    F[spec.index(coords)] = std::stod(fields.back());
  }
  for (double v : F)
    if (v < 0.0)
      throw std::runtime_error("metric file leaves elements unassigned");
  return F;
}

int run_abelian_lp(const std::vector<std::uint32_t>& moduli,
                   std::uint32_t cycle, const std::string& metric_name,
                   double p, const Global& g) {
  const AbelianGroupSpec spec =
      cycle != 0 ? AbelianGroupSpec::make({cycle})
                 : AbelianGroupSpec::make(moduli);
  InvariantMetric F = [&] {
    if (metric_name == "hamming") return InvariantMetric::hamming(spec);
    if (metric_name == "cycle") return InvariantMetric::cycle(spec);
    if (metric_name.rfind("file:", 0) == 0)
      return InvariantMetric::validated(
          spec, load_metric_file(spec, metric_name.substr(5)));
    throw CLI::ValidationError("--metric", "unknown metric " + metric_name);
  }();
  const CharacterWeights w = fourier_weights(spec, F);
  json payload = {{"order", spec.order},
                  {"exponent", spec.exponent},
                  {"negative_type", w.negative_type},
                  {"min_weight", w.min_weight},
                  {"min_weight_character", w.min_weight_character}};
  if (w.negative_type) {
    const GlReport r = gl_check(spec, F, p);
    payload["measured_distortion"] = r.measured_distortion;
    payload["bound_l1"] = r.bound_l1;
    payload["bound_lp"] =
        std::isfinite(r.bound_lp) ? json(r.bound_lp) : json("inf");
  }
  json config = {{"subcommand", "abelian-lp"},
                 {"moduli", cycle != 0 ? std::vector<std::uint32_t>{cycle}
                                       : moduli},
                 {"metric", metric_name},
                 {"p", p},
                 {"seed", g.seed},
                 {"threads", g.threads}};
  emit(config, payload, g);
  return w.negative_type ? 0 : 2;
}

int run_symmetrize(const std::string& input, const Global& g) {
  std::ifstream f(input);
  if (!f) throw std::runtime_error("cannot open input file " + input);
  json doc = json::parse(f);
  const std::uint32_t n = doc.at("n").get<std::uint32_t>();
  check_modulus(n);
  const auto& vals = doc.at("values");
  if (vals.size() != group_order(n))
    throw std::runtime_error("values must list one vector per group element");
  std::vector<Eigen::VectorXd> values;
  for (const auto& row : vals) {
    Eigen::VectorXd v(row.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = row[i].get<double>();
    values.push_back(std::move(v));
  }
  const GramKernel k = symmetrize(values, [n](std::uint64_t a, std::uint64_t b) {
    return dense_index(
        multiply(element_from_index(a, n), element_from_index(b, n), n), n);
  });
  json coords = json::array();
  for (Eigen::Index r = 0; r < k.coords.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < k.coords.cols(); ++c)
      row.push_back(k.coords(r, c));
    coords.push_back(std::move(row));
  }
  json payload = {{"n", n},
                  {"degenerate", k.degenerate},
                  {"clipped_mass", k.clipped_mass},
                  {"trace", k.K.trace()},
                  {"coords", std::move(coords)}};
  json config = {{"subcommand", "symmetrize"},
                 {"input", input},
                 {"seed", g.seed},
                 {"threads", g.threads}};
  emit(config, payload, g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lamplighter embedding toolkit"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "global RNG seed");
  app.add_option("--threads", g.threads, "worker count (0 = hardware)");
  app.add_option("--out", g.out, "output JSON path (default stdout)");

  std::uint32_t n = 9, count = 0, seeds = 1, cycle = 0;
  std::vector<std::uint32_t> gens, moduli;
  double alpha = 0.5, p = 1.0;
  std::optional<double> eta, delta;
  std::uint64_t sample = 0;
  std::string mode = "estimate", metric_name = "cycle", input;

  auto* wm = app.add_subcommand("word-metric-check",
                                "BFS oracle, surrogate band, lamp bound");
  wm->add_option("--n", n, "cycle length")->required();
  wm->add_option("--gens", gens, "movement steps (default {1})");

  auto* ed = app.add_subcommand("embed-distortion",
                                "distortion of the arc embedding");
  ed->add_option("--n", n, "cycle length")->required();
  ed->add_option("--alpha", alpha, "profile exponent");
  ed->add_option("--eta", eta, "raw in-arc value");
  ed->add_option("--delta", delta, "raw off-arc scale");
  ed->add_option("--sample", sample, "sampled pairs (0 = exact reduced scan)");

  auto* lb = app.add_subcommand("lower-bound",
                                "representation averaging lower bound");
  lb->add_option("--n", n, "cycle length")->required();
  lb->add_option("--gens", gens, "movement steps (default {1})");
  lb->add_option("--sample", sample, "sampled mean size beyond the BFS cap");

  auto* zz = app.add_subcommand("zigzag", "spectral lower-bound pipeline");
  zz->add_option("--n", n, "cycle length")->required();
  zz->add_option("--count", count, "generator count |S|")->required();
  zz->add_option("--seeds", seeds, "number of seeds");
  zz->add_option("--mode", mode, "exact|estimate")
      ->check(CLI::IsMember({"exact", "estimate"}));

  auto* ab = app.add_subcommand("abelian-lp", "Fourier L_p pipeline");
  ab->add_option("--moduli", moduli, "factor moduli");
  ab->add_option("--cycle", cycle, "shorthand for a single cyclic factor");
  ab->add_option("--metric", metric_name, "hamming|cycle|file:<path>");
  ab->add_option("--p", p, "target exponent in [1,2]");

  auto* sy = app.add_subcommand("symmetrize", "Gram-average an embedding");
  sy->add_option("--input", input, "JSON {n, values}")->required();

  // let --seed/--threads/--out appear after the subcommand
  for (CLI::App* s : {wm, ed, lb, zz, ab, sy}) s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (wm->parsed()) return run_word_metric_check(n, gens, g);
    if (ed->parsed()) return run_embed_distortion(n, alpha, eta, delta, sample, g);
    if (lb->parsed()) return run_lower_bound(n, gens, sample, g);
    if (zz->parsed()) return run_zigzag(n, count, seeds, mode, g);
    if (ab->parsed()) {
      if ((cycle == 0) == moduli.empty())
        throw CLI::ValidationError("abelian-lp",
                                   "give exactly one of --moduli / --cycle");
      return run_abelian_lp(moduli, cycle, metric_name, p, g);
    }
    if (sy->parsed()) return run_symmetrize(input, g);
  } catch (const std::exception& e) {
    json err = {{"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return 3;
  }
  return 0;
}
