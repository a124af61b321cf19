#include "bstopo/cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "bstopo/core/error.hpp"
#include "bstopo/core/random.hpp"
#include "bstopo/core/rational.hpp"
#include "bstopo/lab/experiments.hpp"
#include "bstopo/lab/graphs.hpp"
#include "bstopo/lab/report.hpp"
#include "bstopo/mmspace/cheeger.hpp"
#include "bstopo/mmspace/generators.hpp"
#include "bstopo/mmspace/relations.hpp"
#include "bstopo/mmspace/space_io.hpp"
#include "bstopo/nerve/diagnostics.hpp"
#include "bstopo/nerve/nerve.hpp"
#include "bstopo/sampling/forest.hpp"
#include "bstopo/sampling/thinning.hpp"
#include "bstopo/simplicial/complex_io.hpp"
#include "bstopo/simplicial/glue.hpp"
#include "bstopo/simplicial/homology.hpp"
#include "bstopo/simplicial/profile.hpp"
#include "bstopo/simplicial/rooted.hpp"

namespace bstopo::cli {
namespace {

struct Options {
  std::vector<std::string> input;
  std::string space;
  std::string out;
  std::uint64_t seed = 0;
  double eps = 1.0;
  std::uint32_t stages = 5;
  std::optional<double> intensity;
  double witness_density = 0.0;
  std::optional<int> up_to;
  int degree = 1;
  std::size_t wedge = 2;
  std::string cyclic = "10";
  std::string mode = "exact";
  std::string radius;
  std::string weights;
  std::int64_t multiplier = 1;
  std::size_t trials = 10;
  std::size_t cap = 24;
  std::string sizes = "6,8,10,12,14,16";
  std::string circle = "12,24";
  std::string h = "0.5";
  int rank = 2;
  std::string theta = "1;2";
  std::string theta_inverse;
  int p = 2;
  std::string levels = "0:4";
  std::size_t cutoff = 2;
  std::size_t draws = 1000;
  std::string mu1;
  std::string mu2;
  std::string x1;
  std::string x2;
  std::size_t p1 = 0;
  std::size_t p2 = 0;
  bool collapse = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    const auto a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    const auto b = cur.find_last_not_of(" \t");
    out.push_back(cur.substr(a, b - a + 1));
  }
  return out;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  for (const auto& tok : split(text, ',')) {
    T value{};
    std::istringstream in(tok);
    in >> value;
    if (!in || !in.eof()) throw MalformedInput(std::string("bad ") + what + " '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_rational(tok));
  return out;
}

void emit(const lab::ExperimentReport& report, const Options& o, std::ostream& out) {
  if (!o.out.empty()) lab::write_report(report, o.out);
  out << report.to_csv();
}

std::string betti_line(const std::vector<std::size_t>& betti) {
  std::string s;
  for (std::size_t i = 0; i < betti.size(); ++i) s += (i ? " " : "") + std::to_string(betti[i]);
  return s;
}

simplicial::SimplicialComplex load_complex(const std::string& path, int max_dim = simplicial::kDefaultMaxDim) {
  if (path.empty()) throw ContractError("--input is required");
  return simplicial::read_complex(path, max_dim);
}

mm::FiniteMMSpace load_space(const std::string& path) {
  if (path.empty()) throw ContractError("--space is required");
  return mm::read_space(path);
}

int cmd_betti(const Options& o, std::ostream& out) {
  if (o.input.size() != 1) throw ContractError("betti takes exactly one --input");
  const int max_dim = std::max(simplicial::kDefaultMaxDim, o.up_to.value_or(0) + 1);
  const auto K = load_complex(o.input[0], max_dim);
  int up_to = o.up_to.value_or(std::max(0, std::min(K.top_dim(), K.truncated() ? max_dim - 1 : max_dim)));
  const auto betti = simplicial::betti_numbers(K, up_to);
  if (!o.out.empty()) {
    lab::ExperimentReport report;
    report.name = "betti";
    report.add_param("input", o.input[0]);
    report.columns = {"k", "b_k"};
    for (std::size_t k = 0; k < betti.size(); ++k)
      report.add_row({static_cast<std::int64_t>(k), static_cast<std::int64_t>(betti[k])});
    lab::write_report(report, o.out);
  }
  out << betti_line(betti) << "\n";
  return 0;
}

std::string hex(const std::string& bytes) {
  std::ostringstream s;
  for (unsigned char c : bytes) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(c);
  return s.str();
}

int cmd_profile(const Options& o, std::ostream& out) {
  if (o.input.size() != 1) throw ContractError("profile takes exactly one --input");
  const auto K = load_complex(o.input[0]);
  const auto radii = o.radius.empty() ? std::vector<std::size_t>{1} : parse_list<std::size_t>(o.radius, "radius");
  lab::ExperimentReport report;
  report.name = "profile";
  report.add_param("input", o.input[0]);
  report.columns = {"radius", "class", "mass", "code"};
  for (auto r : radii) {
    const auto prof = simplicial::local_profile(K, r);
    std::int64_t idx = 0;
    for (const auto& [code, mass] : prof.masses)
      report.add_row({static_cast<std::int64_t>(r), idx++, mass, hex(code)});
  }
  emit(report, o, out);
  return 0;
}

int cmd_glue(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw ContractError("glue needs at least one --input");
  auto weights = parse_rationals(o.weights);
  if (weights.empty()) weights.assign(o.input.size(), Rational(1));
  if (weights.size() != o.input.size()) throw ContractError("glue: one weight per --input required");
  simplicial::WeightedFamily fam;
  fam.copy_multiplier = o.multiplier;
  for (std::size_t j = 0; j < o.input.size(); ++j) fam.members.push_back({load_complex(o.input[j]), weights[j]});
  const auto glued = simplicial::glue_weighted(fam);
  if (o.out.empty()) {
    out << simplicial::format_complex(glued);
  } else {
    simplicial::write_complex(o.out, glued);
    out << "vertices " << glued.vertex_count() << "\n";
  }
  return 0;
}

double default_intensity(const Options& o) { return o.intensity.value_or(4.0 / o.eps); }

int cmd_thin(const Options& o, std::ostream& out) {
  const auto space = load_space(o.space);
  const sampling::ThinningParams params{o.eps, o.stages, default_intensity(o), o.seed};
  const auto config = sampling::thin(space, params);
  const auto check = sampling::separated_covering_check(space, config, o.eps);
  lab::ExperimentReport report;
  report.name = "thin";
  report.seed = o.seed;
  report.add_param("eps", format_double(o.eps));
  report.add_param("stages", std::to_string(o.stages));
  report.add_param("intensity", format_double(params.intensity));
  report.add_param("separated", check.separated ? "true" : "false");
  report.add_param("covering_radius", format_double(check.covering_radius));
  report.columns = {"point", "mark", "stage"};
  for (std::size_t i = 0; i < config.size(); ++i)
    report.add_row({static_cast<std::int64_t>(config.points[i]), config.marks[i],
                    static_cast<std::int64_t>(config.stages[i])});
  if (!o.out.empty()) lab::write_report(report, o.out);
  out << "# separated " << (check.separated ? "true" : "false") << " covering_radius "
      << format_double(check.covering_radius) << "\n";
  out << report.to_csv();
  return 0;
}

// estimate_eps plus a midpoint spot check at pair distances up to 20 eps.
int cmd_scale(const Options& o, std::ostream& out) {
  const auto space = load_space(o.space);
  const double eps = nerve::estimate_eps(space, o.trials, o.seed);
  const double reach = o.radius.empty() ? 20 * eps : parse_double(o.radius);
  const auto mid = nerve::midpoint_spot_check(space, reach, 10 * o.trials, o.seed);
  lab::ExperimentReport report;
  report.name = "scale";
  report.seed = o.seed;
  report.add_param("samples", std::to_string(o.trials));
  report.columns = {"eps_estimate", "max_dist", "pairs", "mean_multiplicity", "max_multiplicity", "max_spread",
                    "clustered_fraction"};
  report.add_row({eps, reach, static_cast<std::int64_t>(mid.pairs), mid.mean_multiplicity,
                  static_cast<std::int64_t>(mid.max_multiplicity), mid.max_spread, mid.clustered_fraction});
  if (!o.out.empty()) lab::write_report(report, o.out);
  out << report.to_csv();
  return 0;
}

int cmd_nerve(const Options& o, std::ostream& out) {
  const auto space = load_space(o.space);
  nerve::NerveParams params;
  params.eps = o.eps;
  params.intensity = default_intensity(o);
  params.stages = o.stages;
  params.seed = o.seed;
  params.witness_density = o.witness_density;
  params.collapse = o.collapse;
  const int up_to = o.up_to.value_or(space.dim() == 2 ? 2 : 1);
  params.max_dim = std::max(simplicial::kDefaultMaxDim, up_to + 1);
  const auto result = nerve::net_to_nerve(space, params);
  const auto betti = simplicial::betti_numbers(result.complex, up_to);
  const auto& d = result.diagnostics;
  lab::ExperimentReport report;
  report.name = "nerve";
  report.seed = o.seed;
  report.add_param("eps", format_double(o.eps));
  report.add_param("intensity", format_double(params.intensity));
  report.add_param("stages", std::to_string(o.stages));
  report.add_param("collapse", o.collapse ? "true" : "false");
  report.columns = {"centers", "facets", "core_vertices", "edges", "triangles"};
  for (std::size_t k = 0; k < betti.size(); ++k) report.columns.push_back("b" + std::to_string(k));
  for (const char* c : {"separated", "covering_radius", "max_degree", "v0", "v1", "degree_bound"})
    report.columns.push_back(c);
  std::vector<lab::Cell> row{static_cast<std::int64_t>(result.config.size()),
                             static_cast<std::int64_t>(result.facet_count),
                             static_cast<std::int64_t>(result.complex.vertex_count()),
                             static_cast<std::int64_t>(result.complex.count(1)),
                             static_cast<std::int64_t>(result.complex.count(2))};
  for (auto b : betti) row.emplace_back(static_cast<std::int64_t>(b));
  row.emplace_back(std::string(d.separated ? "true" : "false"));
  row.emplace_back(d.covering_radius);
  row.emplace_back(static_cast<std::int64_t>(d.max_degree));
  row.emplace_back(d.v0);
  row.emplace_back(d.v1);
  row.emplace_back(std::string(d.degree_bound_holds ? "true" : "false"));
  report.add_row(std::move(row));
  if (!o.out.empty()) lab::write_report(report, o.out);
  out << betti_line(betti) << "\n" << report.to_csv();
  return 0;
}

int cmd_luck(const Options& o, std::ostream& out) {
  std::vector<lab::VoltageGraph> chain;
  for (auto n : parse_list<std::size_t>(o.cyclic, "cover degree")) chain.push_back(lab::cyclic_wedge(o.wedge, n));
  const auto report = lab::luck_experiment(chain, o.degree);
  emit(report, o, out);
  return 0;
}

int cmd_elek(const Options& o, std::ostream& out) {
  std::vector<simplicial::SimplicialComplex> family;
  if (!o.input.empty()) {
    for (const auto& path : o.input) family.push_back(load_complex(path));
  } else {
    for (auto n : parse_list<std::size_t>(o.sizes, "torus size")) family.push_back(lab::triangulated_torus(n));
  }
  const auto radii = o.radius.empty() ? std::vector<std::size_t>{2} : parse_list<std::size_t>(o.radius, "radius");
  emit(lab::elek_experiment(family, o.degree, radii), o, out);
  return 0;
}

mm::CheegerMode parse_mode(const std::string& mode) {
  if (mode == "exact") return mm::CheegerMode::Exact;
  if (mode == "heuristic") return mm::CheegerMode::Heuristic;
  throw ContractError("--mode must be exact or heuristic");
}

int cmd_cheeger(const Options& o, std::ostream& out) {
  const double r = o.radius.empty() ? 1.0 : parse_double(o.radius);
  if (!o.space.empty()) {
    const auto space = load_space(o.space);
    mm::CheegerOptions co;
    co.mode = parse_mode(o.mode);
    co.exhaustive_cap = o.cap;
    co.seed = o.seed;
    const auto result = mm::cheeger_radius_r(space, r, co);
    lab::ExperimentReport report;
    report.name = "cheeger";
    report.seed = o.seed;
    report.add_param("space", o.space);
    report.add_param("r", format_double(r));
    report.add_param("mode", o.mode);
    report.columns = {"points", "h_r", "witness_size"};
    report.add_row({static_cast<std::int64_t>(space.size()), result.value,
                    static_cast<std::int64_t>(result.witness.size())});
    emit(report, o, out);
    return 0;
  }
  lab::CheegerTrendOptions to;
  to.r = r;
  to.h = parse_rational(o.h);
  to.mode = parse_mode(o.mode);
  to.exhaustive_cap = o.cap;
  to.seed = o.seed;
  emit(lab::cheeger_trend(parse_rationals(o.circle), to), o, out);
  return 0;
}

int cmd_mvcheck(const Options& o, std::ostream& out) {
  if (o.input.size() != 1) throw ContractError("mvcheck takes exactly one --input");
  const auto K = load_complex(o.input[0]);
  lab::ExperimentReport report;
  report.name = "mvcheck";
  report.seed = o.seed;
  report.add_param("input", o.input[0]);
  report.add_param("d", std::to_string(o.degree));
  report.columns = {"trial", "U", "V", "b_U", "b_K", "b_UV", "holds"};
  bool all = true;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto split = lab::random_cover_split(K, hash_ids(o.seed, Stream::Experiment, {t}));
    const auto res = lab::mayer_vietoris_check(K, split.U, split.V, o.degree);
    all = all && res.holds;
    report.add_row({static_cast<std::int64_t>(t), static_cast<std::int64_t>(split.U.size()),
                    static_cast<std::int64_t>(split.V.size()), static_cast<std::int64_t>(res.b_u),
                    static_cast<std::int64_t>(res.b_k), static_cast<std::int64_t>(res.b_inter),
                    std::string(res.holds ? "true" : "false")});
  }
  emit(report, o, out);
  if (!all) throw ContractError("Mayer-Vietoris bound violated");
  return 0;
}

std::vector<sampling::Word> parse_words(const std::string& text) {
  std::vector<sampling::Word> out;
  for (const auto& part : split(text, ';')) {
    sampling::Word w;
    std::istringstream in(part);
    int letter = 0;
    while (in >> letter) w.push_back(letter);
    if (!in.eof()) throw MalformedInput("bad word '" + part + "'");
    out.push_back(std::move(w));
  }
  return out;
}

int cmd_forest(const Options& o, std::ostream& out) {
  sampling::ForestParams fp;
  fp.rank = o.rank;
  fp.theta = parse_words(o.theta);
  fp.theta_inverse = parse_words(o.theta_inverse);
  fp.word_cutoff = o.cutoff;
  fp.p = o.p;
  const auto lv = split(o.levels, ':');
  if (lv.size() != 2) throw MalformedInput("--levels must be lo:hi");
  fp.level_lo = std::stoi(lv[0]);
  fp.level_hi = std::stoi(lv[1]);
  const int span = fp.level_hi - fp.level_lo;
  std::vector<std::int64_t> same(static_cast<std::size_t>(span) + 1, 0);
  std::int64_t acyclic = 0;
  const sampling::SemidirectElement base{{}, fp.level_lo};
  for (std::size_t t = 0; t < o.draws; ++t) {
    const auto sample = sampling::forest_sample(fp, hash_ids(o.seed, Stream::Experiment, {t}));
    if (sampling::is_forest(sample.nodes.size(), sample.edges)) ++acyclic;
    const auto comp = sampling::forest_components(sample);
    const auto a = sample.index.at(base);
    for (int dl = 0; dl <= span; ++dl) {
      const auto b = sample.index.at(sampling::SemidirectElement{{}, fp.level_lo + dl});
      if (comp[a] == comp[b]) ++same[static_cast<std::size_t>(dl)];
    }
  }
  lab::ExperimentReport report;
  report.name = "forest";
  report.seed = o.seed;
  report.add_param("p", std::to_string(fp.p));
  report.add_param("draws", std::to_string(o.draws));
  report.add_param("acyclic_draws", std::to_string(acyclic));
  report.columns = {"delta", "same_component", "frequency", "predicted"};
  const auto draws = static_cast<std::int64_t>(o.draws);
  for (int dl = 0; dl <= span; ++dl) {
    const Rational predicted = dl < fp.p ? Rational(fp.p - dl, fp.p) : Rational(0);
    report.add_row({static_cast<std::int64_t>(dl), same[static_cast<std::size_t>(dl)],
                    draws > 0 ? Rational(same[static_cast<std::size_t>(dl)], draws) : Rational(0), predicted});
  }
  emit(report, o, out);
  return 0;
}

int cmd_relate(const Options& o, std::ostream& out) {
  const auto space = load_space(o.space);
  const std::string radius = o.radius.empty() ? "1" : o.radius;
  bool related = false;
  if (!o.x1.empty() || !o.x2.empty()) {
    const auto x1 = parse_list<std::uint32_t>(o.x1, "point");
    const auto x2 = parse_list<std::uint32_t>(o.x2, "point");
    related = mm::related_subsets(space, x1, x2, o.p1, o.p2, o.eps, parse_double(radius));
  } else {
    mm::PointedMeasurePair pair;
    pair.ambient = &space;
    pair.mu1 = parse_rationals(o.mu1);
    pair.mu2 = parse_rationals(o.mu2);
    pair.p1 = o.p1;
    pair.p2 = o.p2;
    related = mm::related_measures(pair, parse_rational(format_double(o.eps)), parse_rational(radius));
  }
  out << (related ? "true" : "false") << "\n";
  return 0;
}

// Reads `key = value` lines and returns them as "--key value" tokens for the
// keys not already given on the command line.
std::vector<std::string> config_tokens(const std::string& path, const std::vector<std::string>& args) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config " + path);
  std::set<std::string> given;
  for (const auto& a : args)
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  std::vector<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path + ":" + std::to_string(line_no) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string{};
      return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(path + ":" + std::to_string(line_no) + ": empty key");
    if (given.count(key)) continue;
    out.push_back("--" + key);
    out.push_back(value);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Benjamini-Schramm topology lab: homology, nets and nerves, covers, Cheeger constants"};
  app.require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"betti", "Betti numbers of a complex file"},
      {"profile", "local ball profile of a complex file"},
      {"glue", "weighted gluing of connected complexes"},
      {"thin", "staged Poisson thinning on a space file"},
      {"nerve", "net -> nerve -> Betti pipeline on a space file"},
      {"scale", "heuristic eps for a space file and a midpoint spot check"},
      {"luck", "normalized Betti numbers along cyclic covers of a wedge of circles"},
      {"elek", "Betti ratios and profile distances along a family of complexes"},
      {"cheeger", "radius-r Cheeger constant of a space or a family of circles"},
      {"mvcheck", "Mayer-Vietoris bound on random covering decompositions"},
      {"forest", "random forest sampler on a truncated semidirect product"},
      {"relate", "(eps,R)-relatedness of measures or subsets"},
  };
  std::string config_path;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "file of key = value lines; flags override it");
    sub->add_option("--input", o.input, "complex file(s)")->delimiter(',');
    sub->add_option("--space", o.space, "space file");
    sub->add_option("--out", o.out, "write the report as CSV here and as JSON to <out>.json");
    sub->add_option("--seed", o.seed);
    sub->add_option("--eps", o.eps);
    sub->add_option("--stages", o.stages);
    sub->add_option("--intensity", o.intensity, "Poisson intensity (default 4/eps)");
    sub->add_option("--witness-density", o.witness_density, "witness spacing (default: space resolution)");
    sub->add_option("--up-to", o.up_to);
    sub->add_option("--degree", o.degree, "homology degree");
    sub->add_option("--wedge", o.wedge, "number of circles in the base wedge");
    sub->add_option("--cyclic", o.cyclic, "cyclic cover degrees, comma separated");
    sub->add_option("--mode", o.mode, "exact|heuristic");
    sub->add_option("--radius", o.radius, "ball radius / radii, or R for relate");
    sub->add_option("--weights", o.weights, "gluing weights, comma separated");
    sub->add_option("--multiplier", o.multiplier, "gluing copy multiplier D");
    sub->add_option("--trials", o.trials);
    sub->add_option("--cap", o.cap, "largest space for exact Cheeger enumeration");
    sub->add_option("--sizes", o.sizes, "triangulated torus sizes for elek");
    sub->add_option("--circle", o.circle, "circle circumferences for cheeger");
    sub->add_option("--resolution", o.h, "circle resolution for cheeger");
    sub->add_option("--rank", o.rank);
    sub->add_option("--theta", o.theta, "generator images, ';' between words");
    sub->add_option("--theta-inverse", o.theta_inverse);
    sub->add_option("--p", o.p);
    sub->add_option("--levels", o.levels, "lo:hi");
    sub->add_option("--cutoff", o.cutoff, "word length cutoff");
    sub->add_option("--draws", o.draws);
    sub->add_option("--mu1", o.mu1);
    sub->add_option("--mu2", o.mu2);
    sub->add_option("--x1", o.x1);
    sub->add_option("--x2", o.x2);
    sub->add_option("--p1", o.p1);
    sub->add_option("--p2", o.p2);
    sub->add_flag("--collapse", o.collapse, "nerve: compute homology on the strong-collapse core");
  }

  try {
    std::vector<std::string> args = raw_args;
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] == "--config") {
        const auto extra = config_tokens(args[i + 1], args);
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
        args.insert(args.end(), extra.begin(), extra.end());
        break;
      }
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "betti") return cmd_betti(o, out);
    if (name == "profile") return cmd_profile(o, out);
    if (name == "glue") return cmd_glue(o, out);
    if (name == "thin") return cmd_thin(o, out);
    if (name == "nerve") return cmd_nerve(o, out);
    if (name == "scale") return cmd_scale(o, out);
    if (name == "luck") return cmd_luck(o, out);
    if (name == "elek") return cmd_elek(o, out);
    if (name == "cheeger") return cmd_cheeger(o, out);
    if (name == "mvcheck") return cmd_mvcheck(o, out);
    if (name == "forest") return cmd_forest(o, out);
    if (name == "relate") return cmd_relate(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // ContractError, MalformedInput and argument conversion failures.
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace bstopo::cli
