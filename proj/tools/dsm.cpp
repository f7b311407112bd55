// dsm: simulate far-field data for small cracks, image it with the direct
// sampling indicators, evaluate the closed-form predictors and compare maps.
//
// Exit codes: 0 ok, 1 bad input or usage, 2 scene rejected, 3 file I/O.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsm/dsm.hpp"

namespace {

using json = nlohmann::ordered_json;
using args_list = std::vector<std::pair<std::string, std::string>>;

constexpr const char* tool_version = "1.0.0";

enum exit_code { ok = 0, bad_input = 1, rejected = 2, io_failure = 3 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return dsm::io::format_number(v); }

std::vector<double> parse_list(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<double> out;
  try {
    for (const auto& tok : dsm::io::split(text, ',')) out.push_back(dsm::io::parse_number(tok));
  } catch (const dsm::io::format_error&) {
    throw usage_error(what + ": could not parse '" + text + "'");
  }
  if (out.size() != expected)
    throw usage_error(what + " needs " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
  return out;
}

std::size_t as_count(double v, const std::string& what) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e7) throw usage_error(what + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

dsm::imaging_grid parse_grid(const std::string& text) {
  const auto v = parse_list(text, 6, "--grid");
  dsm::imaging_grid g{v[0], v[1], v[2], v[3], as_count(v[4], "grid nx"), as_count(v[5], "grid ny")};
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("--grid: ") + e.what());
  }
  return g;
}

json grid_json(const dsm::imaging_grid& g) {
  return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"y_min", g.y_min}, {"y_max", g.y_max}, {"nx", g.nx}, {"ny", g.ny}};
}

// Wavenumbers from either --lambda or --lambda-range "min,max,F".
std::vector<double> resolve_wavenumbers(const std::string& lambda, const std::string& range) {
  if (!lambda.empty() && !range.empty()) throw usage_error("give either --lambda or --lambda-range, not both");
  if (lambda.empty() && range.empty()) throw usage_error("one of --lambda or --lambda-range is required");
  try {
    if (!lambda.empty()) {
      const double l = parse_list(lambda, 1, "--lambda")[0];
      return dsm::wavenumbers_from_wavelengths(l, l, 1);
    }
    const auto v = parse_list(range, 3, "--lambda-range");
    const auto ks = dsm::wavenumbers_from_wavelengths(v[0], v[1], as_count(v[2], "--lambda-range count"));
    for (std::size_t f = 1; f < ks.size(); ++f)
      if (!(ks[f] > ks[f - 1])) throw usage_error("--lambda-range must give distinct wavelengths");
    return ks;
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

// Incident angles offset + 2 pi l / L, offset given in degrees.
std::vector<double> resolve_incident_angles(double offset_degrees, std::size_t count) {
  if (!std::isfinite(offset_degrees)) throw usage_error("--incident-angle must be finite");
  if (count == 0) throw usage_error("--n-incident must be at least 1");
  auto angles = dsm::uniform_angles(count);
  const double offset = offset_degrees * std::numbers::pi / 180.0;
  for (auto& a : angles) a += offset;
  return angles;
}

dsm::scene load_scene(const std::string& path) {
  std::string text;
  try {
    text = dsm::io::read_file(path);
  } catch (const std::runtime_error& e) {
    throw io_error(e.what());
  }
  try {
    return dsm::io::read_scene(text);
  } catch (const dsm::io::format_error& e) {
    throw usage_error(path + ": " + e.what());
  }
}

dsm::far_field_tensor load_tensor(const std::string& path) {
  std::string text;
  try {
    text = dsm::io::read_file(path);
  } catch (const std::runtime_error& e) {
    throw io_error(e.what());
  }
  try {
    return dsm::io::read_tensor(text);
  } catch (const dsm::io::format_error& e) {
    throw usage_error(path + ": " + e.what());
  }
}

dsm::indicator_map load_map(const std::string& path) {
  std::string text;
  try {
    text = dsm::io::read_file(path);
  } catch (const std::runtime_error& e) {
    throw io_error(e.what());
  }
  try {
    return dsm::io::read_map_csv(text);
  } catch (const dsm::io::format_error& e) {
    throw usage_error(path + ": " + e.what());
  }
}

void save(const std::string& path, const std::string& bytes) {
  try {
    dsm::io::write_atomic(path, bytes);
  } catch (const std::exception& e) {
    throw io_error(e.what());
  }
}

// Every run records its resolved arguments; "replay" feeds them back verbatim.
void save_manifest(const std::string& out, const std::string& command, const args_list& args,
                   const std::vector<std::string>& inputs, const std::vector<std::string>& outputs, json resolved) {
  json m;
  m["tool"] = "dsm";
  m["version"] = tool_version;
  m["command"] = command;
  json a = json::object();
  for (const auto& [k, v] : args) a[k] = v;
  m["arguments"] = a;
  m["inputs"] = inputs;
  m["outputs"] = outputs;
  m["resolved"] = std::move(resolved);
  save(out + ".manifest.json", m.dump(2) + "\n");
}

void save_map(const std::string& out, const dsm::indicator_map& map) {
  save(out + ".csv", dsm::io::write_map_csv(map));
  save(out + ".pgm", dsm::io::write_map_pgm(map));
}

// Adds complex white noise at the given SNR (dB, relative to the mean power
// of the tensor). Each component is N(0, sigma^2 / 2).
void add_noise(dsm::far_field_tensor& t, double snr_db, std::uint64_t seed) {
  double power = 0.0;
  for (const auto& v : t.values()) power += std::norm(v);
  power /= static_cast<double>(t.values().size());
  if (!(power > 0.0)) return;
  const double sigma = std::sqrt(power / std::pow(10.0, snr_db / 10.0) / 2.0);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, sigma);
  for (auto& v : t.values()) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v += dsm::complex(re, im);
  }
}

struct common_opts {
  std::string grid = "-1,1,-1,1,201,201";
  std::string out;
};

struct simulate_opts {
  std::string scene;
  std::string lambda;
  std::string lambda_range;
  std::size_t n_obs = 30;
  std::size_t n_incident = 1;
  double incident_angle = 90.0;
  std::string generator = "full";
  int quad_nodes = 64;
  std::string noise_snr;
  std::uint64_t seed = 0;
  std::string out;
};

int run_simulate(const simulate_opts& o) {
  const auto sc = load_scene(o.scene);
  dsm::acquisition_config cfg;
  cfg.wavenumbers = resolve_wavenumbers(o.lambda, o.lambda_range);
  cfg.observation_count = o.n_obs;
  cfg.incident_angles = resolve_incident_angles(o.incident_angle, o.n_incident);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  const dsm::quadrature_spec quad{o.quad_nodes};
  try {
    quad.validate();
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("--quad-nodes: ") + e.what());
  }

  bool hard = false;
  for (double k : cfg.wavenumbers) {
    for (const auto& v : dsm::validate_scene(sc, k)) {
      std::cerr << (v.level == dsm::scene_violation::severity::hard ? "error" : "warning") << ": k = " << num(k)
                << ": " << v.describe() << "\n";
      hard = hard || v.level == dsm::scene_violation::severity::hard;
    }
  }
  if (hard) return rejected;

  dsm::far_field_tensor tensor;
  if (o.generator == "full") {
    tensor = dsm::simulate_full(sc, cfg, quad);
  } else if (o.generator == "order1") {
    tensor = dsm::simulate_asymptotic(sc, cfg, dsm::asymptotic_order::first);
  } else if (o.generator == "order2") {
    try {
      tensor = dsm::simulate_asymptotic(sc, cfg, dsm::asymptotic_order::second);
    } catch (const std::invalid_argument& e) {
      throw usage_error(std::string("generator order2: ") + e.what());
    }
  } else {
    throw usage_error("unknown generator '" + o.generator + "' (expected full, order1 or order2)");
  }

  json resolved;
  resolved["wavenumbers"] = cfg.wavenumbers;
  resolved["observation_count"] = cfg.observation_count;
  resolved["incident_angles"] = cfg.incident_angles;
  resolved["generator"] = o.generator;
  resolved["quadrature_nodes_per_crack"] = o.generator == "full" ? json(o.quad_nodes) : json(nullptr);
  if (!o.noise_snr.empty()) {
    const double snr = parse_list(o.noise_snr, 1, "--noise-snr")[0];
    add_noise(tensor, snr, o.seed);
    resolved["noise"] = {{"snr_db", snr}, {"seed", o.seed}, {"engine", "mt19937_64"}};
  } else {
    resolved["noise"] = nullptr;
  }

  save(o.out, dsm::io::write_tensor(tensor));
  const args_list args{{"--scene", o.scene},
                       {"--lambda", o.lambda},
                       {"--lambda-range", o.lambda_range},
                       {"--n-obs", std::to_string(o.n_obs)},
                       {"--n-incident", std::to_string(o.n_incident)},
                       {"--incident-angle", num(o.incident_angle)},
                       {"--generator", o.generator},
                       {"--quad-nodes", std::to_string(o.quad_nodes)},
                       {"--noise-snr", o.noise_snr},
                       {"--seed", std::to_string(o.seed)},
                       {"--out", o.out}};
  save_manifest(o.out, "simulate", args, {o.scene}, {o.out, o.out + ".manifest.json"}, resolved);
  std::cout << "wrote " << o.out << " (F=" << tensor.frequencies() << " L=" << tensor.incidents()
            << " N=" << tensor.observations() << ")\n";
  return ok;
}

struct image_opts {
  std::string tensor;
  std::string method = "single";
  std::size_t frequency_index = 0;
  std::size_t incident_index = 0;
  common_opts common;
};

int run_image(const image_opts& o) {
  const auto t = load_tensor(o.tensor);
  const auto grid = parse_grid(o.common.grid);
  if (o.frequency_index >= t.frequencies())
    throw usage_error("--frequency-index " + std::to_string(o.frequency_index) + " out of range (F = " +
                      std::to_string(t.frequencies()) + ")");
  if (o.incident_index >= t.incidents())
    throw usage_error("--incident-index " + std::to_string(o.incident_index) + " out of range (L = " +
                      std::to_string(t.incidents()) + ")");

  dsm::indicator_map map;
  if (o.method == "single") {
    map = dsm::indicator_single(t, o.frequency_index, o.incident_index, grid);
  } else if (o.method == "if") {
    map = dsm::indicator_if(t, o.frequency_index, grid);
  } else if (o.method == "aif") {
    map = dsm::indicator_aif(t, o.frequency_index, grid);
  } else if (o.method == "mif") {
    if (t.frequencies() < 2)
      throw usage_error("method mif needs a tensor with at least two wavenumbers; this tensor has F = " +
                        std::to_string(t.frequencies()));
    map = dsm::indicator_mif(t, o.incident_index, grid);
  } else {
    throw usage_error("unknown method '" + o.method + "' (expected single, if, aif or mif)");
  }
  if (map.zero_map) std::cerr << "warning: data is identically zero, map is all zeros\n";

  save_map(o.common.out, map);
  json resolved;
  resolved["method"] = o.method;
  resolved["wavenumbers"] = t.config().wavenumbers;
  resolved["observation_count"] = t.observations();
  resolved["incident_angles"] = t.config().incident_angles;
  resolved["frequency_index"] = o.frequency_index;
  resolved["incident_index"] = o.incident_index;
  resolved["grid"] = grid_json(grid);
  resolved["zero_map"] = map.zero_map;
  const args_list args{{"--tensor", o.tensor},
                       {"--method", o.method},
                       {"--frequency-index", std::to_string(o.frequency_index)},
                       {"--incident-index", std::to_string(o.incident_index)},
                       {"--grid", o.common.grid},
                       {"--out", o.common.out}};
  save_manifest(o.common.out, "image", args, {o.tensor},
                {o.common.out + ".csv", o.common.out + ".pgm", o.common.out + ".manifest.json"}, resolved);
  std::cout << "wrote " << o.common.out << ".csv and " << o.common.out << ".pgm\n";
  return ok;
}

struct predict_opts {
  std::string scene;
  std::string theorem = "s1";
  std::string lambda;
  std::string lambda_range;
  std::size_t n_incident = 1;
  double incident_angle = 90.0;
  int series_trunc = 0;
  common_opts common;
};

int run_predict(const predict_opts& o) {
  const auto sc = load_scene(o.scene);
  const auto grid = parse_grid(o.common.grid);
  const auto ks = resolve_wavenumbers(o.lambda, o.lambda_range);
  const auto angles = resolve_incident_angles(o.incident_angle, o.n_incident);
  if (o.series_trunc < 0 || o.series_trunc > dsm::max_bessel_order)
    throw usage_error("--series-trunc must be 0 (automatic) or between 1 and " + std::to_string(dsm::max_bessel_order));

  dsm::indicator_map map;
  try {
    if (o.theorem == "s1" || o.theorem == "s2" || o.theorem == "aif") {
      if (ks.size() != 1) throw usage_error("theorem " + o.theorem + " takes a single --lambda");
      if (o.theorem == "s1") {
        map = dsm::predict_structure1(sc, ks[0], grid);
      } else if (o.theorem == "s2") {
        if (angles.size() != 1) throw usage_error("theorem s2 takes one incident direction");
        if (!sc.equal_half_lengths())
          throw usage_error("theorem s2 assumes all cracks have the same half_length; this scene does not");
        map = dsm::predict_structure2(sc, ks[0], dsm::unit_vector(angles[0]), grid);
      } else {
        map = dsm::predict_aif(sc, ks[0], angles, grid, o.series_trunc);
      }
    } else if (o.theorem == "mif") {
      if (ks.size() < 2) throw usage_error("theorem mif needs --lambda-range with at least two wavelengths");
      if (angles.size() != 1) throw usage_error("theorem mif takes one incident direction");
      map = dsm::predict_mif(sc, ks, angles[0], grid, o.series_trunc);
    } else {
      throw usage_error("unknown theorem '" + o.theorem + "' (expected s1, s2, aif or mif)");
    }
  } catch (const std::domain_error& e) {
    throw usage_error(e.what());
  }

  save_map(o.common.out, map);
  json resolved;
  resolved["theorem"] = o.theorem;
  resolved["wavenumbers"] = ks;
  resolved["incident_angles"] = angles;
  resolved["series_truncation"] =
      o.series_trunc > 0 ? json(o.series_trunc) : json("ceil(k r) + 25, capped at " + std::to_string(dsm::max_bessel_order));
  resolved["grid"] = grid_json(grid);
  resolved["zero_map"] = map.zero_map;
  const args_list args{{"--scene", o.scene},
                       {"--theorem", o.theorem},
                       {"--lambda", o.lambda},
                       {"--lambda-range", o.lambda_range},
                       {"--n-incident", std::to_string(o.n_incident)},
                       {"--incident-angle", num(o.incident_angle)},
                       {"--series-trunc", std::to_string(o.series_trunc)},
                       {"--grid", o.common.grid},
                       {"--out", o.common.out}};
  save_manifest(o.common.out, "predict", args, {o.scene},
                {o.common.out + ".csv", o.common.out + ".pgm", o.common.out + ".manifest.json"}, resolved);
  std::cout << "wrote " << o.common.out << ".csv and " << o.common.out << ".pgm\n";
  return ok;
}

struct compare_opts {
  std::string a;
  std::string b;
  std::string out;
};

int run_compare(const compare_opts& o) {
  const auto ma = load_map(o.a);
  const auto mb = load_map(o.b);
  if (!(ma.grid == mb.grid)) throw usage_error("maps are on different grids");
  const auto m = dsm::map_distance(ma, mb);
  const std::string report = "linf " + num(m.linf) + "\nl2 " + num(m.l2) + "\n";
  std::cout << report;
  if (!o.out.empty()) {
    save(o.out, report);
    save_manifest(o.out, "compare", {{"--a", o.a}, {"--b", o.b}, {"--out", o.out}}, {o.a, o.b},
                  {o.out, o.out + ".manifest.json"}, json{{"metrics", {"linf", "l2 (root mean square)"}}});
  }
  return ok;
}

struct peaks_opts {
  std::string map;
  std::string scene;
  double floor = 0.5;
  double separation = 0.2;
  std::string out;
};

int run_peaks(const peaks_opts& o) {
  const auto map = load_map(o.map);
  dsm::scene sc;
  if (!o.scene.empty()) sc = load_scene(o.scene);
  if (!(o.separation > 0.0)) throw usage_error("--separation must be positive");
  const auto rep = dsm::find_local_maxima(map, o.separation, o.floor, o.scene.empty() ? nullptr : &sc);

  std::ostringstream os;
  os << "# peak index x y value\n";
  os << "peaks " << rep.peaks.size() << "\n";
  for (std::size_t p = 0; p < rep.peaks.size(); ++p)
    os << "peak " << p << " " << num(rep.peaks[p].position.x) << " " << num(rep.peaks[p].position.y) << " "
       << num(rep.peaks[p].value) << "\n";
  if (!o.scene.empty()) {
    os << "# crack index distance_to_nearest_peak x y value\n";
    for (const auto& c : rep.per_crack) {
      if (std::isinf(c.distance)) {
        os << "crack " << c.crack << " none\n";
      } else {
        os << "crack " << c.crack << " " << num(c.distance) << " " << num(c.position.x) << " " << num(c.position.y)
           << " " << num(c.value) << "\n";
      }
    }
  }
  std::cout << os.str();
  if (!o.out.empty()) {
    save(o.out, os.str());
    const args_list args{{"--map", o.map},
                         {"--scene", o.scene},
                         {"--floor", num(o.floor)},
                         {"--separation", num(o.separation)},
                         {"--out", o.out}};
    std::vector<std::string> inputs{o.map};
    if (!o.scene.empty()) inputs.push_back(o.scene);
    save_manifest(o.out, "peaks", args, inputs, {o.out, o.out + ".manifest.json"},
                  json{{"floor", o.floor}, {"separation", o.separation}});
  }
  return ok;
}

int run(const std::vector<std::string>& argv);

int run_replay(const std::string& manifest_path) {
  json m;
  try {
    m = json::parse(dsm::io::read_file(manifest_path));
  } catch (const json::exception& e) {
    throw usage_error(manifest_path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw io_error(e.what());
  }
  if (!m.contains("command") || !m.contains("arguments") || !m["arguments"].is_object())
    throw usage_error(manifest_path + ": not a dsm run manifest");
  const std::string command = m["command"].get<std::string>();
  if (command == "replay") throw usage_error("refusing to replay a replay");
  std::vector<std::string> argv{"dsm", command};
  for (const auto& [key, value] : m["arguments"].items()) {
    const auto v = value.get<std::string>();
    if (v.empty()) continue;
    argv.push_back(key);
    argv.push_back(v);
  }
  return run(argv);
}

int run(const std::vector<std::string>& argv) {
  CLI::App app{"Direct sampling imaging of small cracks from far-field data", "dsm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version);

  simulate_opts sim;
  auto* s = app.add_subcommand("simulate", "Generate a far-field tensor for a scene");
  s->add_option("--scene", sim.scene, "Scene CSV file")->required();
  s->add_option("--lambda", sim.lambda, "Wavelength (k = 2 pi / lambda)");
  s->add_option("--lambda-range", sim.lambda_range, "min,max,F: F wavelengths uniform in [min, max]");
  s->add_option("--n-obs", sim.n_obs, "Observation directions N")->capture_default_str();
  s->add_option("--n-incident", sim.n_incident, "Incident directions L, uniformly spaced")->capture_default_str();
  s->add_option("--incident-angle", sim.incident_angle, "Angle of the first incident direction, degrees")
      ->capture_default_str();
  s->add_option("--generator", sim.generator, "full | order1 | order2")->capture_default_str();
  s->add_option("--quad-nodes", sim.quad_nodes, "Quadrature nodes per crack (full generator)")->capture_default_str();
  s->add_option("--noise-snr", sim.noise_snr, "Add complex white noise at this SNR in dB");
  s->add_option("--seed", sim.seed, "Noise seed")->capture_default_str();
  s->add_option("--out", sim.out, "Tensor output file")->required();

  image_opts img;
  auto* i = app.add_subcommand("image", "Evaluate an indicator on a tensor");
  i->add_option("--tensor", img.tensor, "Tensor file")->required();
  i->add_option("--method", img.method, "single | if | aif | mif")->capture_default_str();
  i->add_option("--frequency-index", img.frequency_index, "Wavenumber index f (single, if, aif)")
      ->capture_default_str();
  i->add_option("--incident-index", img.incident_index, "Incident index l (single, mif)")->capture_default_str();
  i->add_option("--grid", img.common.grid, "xmin,xmax,ymin,ymax,nx,ny")->capture_default_str();
  i->add_option("--out", img.common.out, "Output prefix; writes PREFIX.csv and PREFIX.pgm")->required();

  predict_opts pre;
  auto* p = app.add_subcommand("predict", "Evaluate a closed-form indicator structure for a scene");
  p->add_option("--scene", pre.scene, "Scene CSV file")->required();
  p->add_option("--theorem", pre.theorem, "s1 | s2 | aif | mif")->capture_default_str();
  p->add_option("--lambda", pre.lambda, "Wavelength (s1, s2, aif)");
  p->add_option("--lambda-range", pre.lambda_range, "min,max,F (mif)");
  p->add_option("--n-incident", pre.n_incident, "Incident directions L (aif)")->capture_default_str();
  p->add_option("--incident-angle", pre.incident_angle, "Angle of the first incident direction, degrees")
      ->capture_default_str();
  p->add_option("--series-trunc", pre.series_trunc, "Bessel series terms; 0 picks ceil(k r) + 25")
      ->capture_default_str();
  p->add_option("--grid", pre.common.grid, "xmin,xmax,ymin,ymax,nx,ny")->capture_default_str();
  p->add_option("--out", pre.common.out, "Output prefix; writes PREFIX.csv and PREFIX.pgm")->required();

  compare_opts cmp;
  auto* c = app.add_subcommand("compare", "Print linf and l2 (RMS) distance between two maps");
  c->add_option("--a,a", cmp.a, "First map CSV")->required();
  c->add_option("--b,b", cmp.b, "Second map CSV")->required();
  c->add_option("--out", cmp.out, "Also write the report (and a manifest) here");

  peaks_opts pk;
  auto* k = app.add_subcommand("peaks", "List local maxima of a map");
  k->add_option("--map,map", pk.map, "Map CSV")->required();
  k->add_option("--scene", pk.scene, "Scene CSV; adds the nearest peak per crack");
  k->add_option("--floor", pk.floor, "Ignore maxima below this value")->capture_default_str();
  k->add_option("--separation", pk.separation, "Minimum distance between reported peaks")->capture_default_str();
  k->add_option("--out", pk.out, "Also write the report (and a manifest) here");

  std::string manifest;
  auto* r = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  r->add_option("manifest", manifest, "Manifest JSON file")->required();

  std::vector<std::string> reversed(argv.rbegin(), argv.rend() - 1);
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : bad_input;
  }

  try {
    if (*s) return run_simulate(sim);
    if (*i) return run_image(img);
    if (*p) return run_predict(pre);
    if (*c) return run_compare(cmp);
    if (*k) return run_peaks(pk);
    if (*r) return run_replay(manifest);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const io_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return io_failure;
  } catch (const dsm::scene_rejected& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rejected;
  } catch (const dsm::solver_error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  }
  return bad_input;
}

} // namespace

int main(int argc, char** argv) {
  return run(std::vector<std::string>(argv, argv + argc));
}
