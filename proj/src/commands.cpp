// Copyright 2026 The cfft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfft/commands.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cfft/error.hpp"

namespace cfft {

namespace {

uint32_t default_k(uint32_t n) {
  switch (n) {
    case 7: return 3;
    case 15: return 11;
    case 31: return 25;
    case 63: return 55;
    case 127: return 111;
    case 255: return 223;
    case 511: return 447;
    case 1023: return 895;
    default: return n - 2 * std::max<uint32_t>(1, n / 16);
  }
}

uint32_t parse_poly(const std::string& s) {
  size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos, 0);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) fail(ErrorCode::ConfigError, "bad polynomial '" + s + "'");
  return static_cast<uint32_t>(v);
}

std::pair<uint32_t, uint32_t> parse_code(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    size_t p1 = 0, p2 = 0;
    const auto a = std::stoul(s.substr(0, comma), &p1);
    const auto b = std::stoul(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1) throw std::invalid_argument("junk");
    return {static_cast<uint32_t>(a), static_cast<uint32_t>(b)};
  } catch (const std::exception&) {
    fail(ErrorCode::ConfigError, "--code expects n,k, got '" + s + "'");
  }
}

int degree_for_n(uint32_t n) {
  for (int m = 2; m <= 16; ++m)
    if ((uint32_t{1} << m) - 1 == n) return m;
  fail(ErrorCode::ConfigError, "n = " + std::to_string(n) + " is not 2^m - 1");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::NotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string>& single_plan_tasks() {
  static const std::vector<std::string> t = {"syndromes", "chien", "forney_A", "tau_even", "tau_odd_opt1",
                                             "tau_odd_opt2", "full"};
  return t;
}

std::string single_task(const RunConfig& cfg) {
  const std::string task = cfg.tasks.empty() ? "syndromes" : cfg.tasks.front();
  const auto& known = single_plan_tasks();
  if (std::find(known.begin(), known.end(), task) == known.end())
    fail(ErrorCode::ConfigError, "task '" + task + "' does not name a single plan");
  return task;
}

CfftPlan full_plan_for(const RunConfig& cfg, const CodeSpec& code, const std::string& task) {
  return build_full_cfft(code.field, compute_cosets(code.n), task_variant(cfg, task));
}

ReducedPlan reduced_for(const RunConfig& cfg, const CodeSpec& code, const std::string& task) {
  if (task == "full") return unreduced(full_plan_for(cfg, code, task));
  return build_reduced_plan(code.field, task_variant(cfg, task), task_support(code, task));
}

SlpNames names_for(const std::string& task) {
  SlpNames names;
  if (task == "syndromes") {
    names.input = "r";
    names.output = "S";
  }
  return names;
}

struct TrialOutcome {
  bool success = false;
  bool flagged = false;
  bool miscorrected = false;
  bool disagree = false;
};

TrialOutcome one_trial(const DecoderPlans& plans, const TrialOptions& opts, uint64_t index) {
  const CodeSpec& code = plans.code();
  const GaloisField& f = *code.field;
  std::seed_seq seq{static_cast<uint32_t>(opts.seed), static_cast<uint32_t>(opts.seed >> 32),
                    static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<uint32_t> sym(0, f.n());
  std::uniform_int_distribution<uint32_t> nonzero(1, f.n());

  std::vector<FieldElement> msg(code.k);
  for (auto& x : msg) x = FieldElement(sym(rng));
  const auto sent = encode(msg, code);

  const uint32_t two_t = code.redundancy();
  uint32_t mu = 0, nu = 0;
  if (opts.overload) {
    // 2 nu + mu in [2t + 1, 2t + 4], mu <= 2t.
    const uint32_t budget = two_t + 1 + static_cast<uint32_t>(rng() % 4);
    mu = static_cast<uint32_t>(rng() % (two_t + 1));
    nu = (budget - mu + 1) / 2;
  } else {
    mu = static_cast<uint32_t>(rng() % (two_t + 1));
    nu = static_cast<uint32_t>(rng() % ((two_t - mu) / 2 + 1));
  }
  std::vector<uint32_t> pos(code.n);
  std::iota(pos.begin(), pos.end(), 0u);
  for (uint32_t i = 0; i < mu + nu && i < code.n; ++i) std::swap(pos[i], pos[i + rng() % (code.n - i)]);
  auto r = sent;
  std::vector<uint32_t> erasures(pos.begin(), pos.begin() + mu);
  for (uint32_t i = 0; i < mu; ++i) r[pos[i]] = FieldElement(sym(rng));
  for (uint32_t i = mu; i < mu + nu; ++i) r[pos[i]] += FieldElement(nonzero(rng));

  TrialOutcome out;
  std::optional<DecodeResult> td, fd;
  if (opts.pipeline != "transform") td = decode_time_domain(r, erasures, plans, opts.option);
  if (opts.pipeline != "time") fd = decode_transform_domain(r, erasures, plans);
  const DecodeResult& primary = td ? *td : *fd;
  out.success = primary.success;
  out.flagged = !primary.success;
  out.miscorrected = primary.success && primary.codeword != sent;
  if (td && fd)
    out.disagree = td->success != fd->success || td->codeword != fd->codeword || td->errata != fd->errata;
  return out;
}

void write_or_print(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) fail(ErrorCode::NotFound, "cannot write " + cfg.out);
  f << text;
}

}  // namespace

RunConfig config_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ConfigError, e.what());
  }
  if (!j.is_object()) fail(ErrorCode::ConfigError, "config must be a JSON object");
  RunConfig cfg;
  const std::vector<std::string> known = {"field", "code", "variant", "task", "option", "trials", "seed",
                                          "out", "fixture", "pipeline", "input", "erasures", "overload",
                                          "format", "workers"};
  for (const auto& [key, v] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      fail(ErrorCode::ConfigError, "unknown config key '" + key + "'");
  try {
    if (j.contains("field")) {
      const auto& f = j.at("field");
      cfg.m = f.at("m").get<int>();
      if (f.contains("prim_poly")) {
        const auto& p = f.at("prim_poly");
        cfg.prim_poly = p.is_string() ? parse_poly(p.get<std::string>()) : p.get<uint32_t>();
      }
    }
    if (j.contains("code")) {
      cfg.n = j.at("code").at("n").get<uint32_t>();
      cfg.k = j.at("code").at("k").get<uint32_t>();
      if (!j.contains("field")) cfg.m = degree_for_n(cfg.n);
    }
    if (j.contains("variant")) cfg.variant = parse_variant(j.at("variant").get<std::string>());
    if (j.contains("task")) {
      const auto& t = j.at("task");
      cfg.tasks = t.is_string() ? std::vector<std::string>{t.get<std::string>()} : t.get<std::vector<std::string>>();
    }
    if (j.contains("option")) {
      const auto& o = j.at("option");
      cfg.option = o.is_string() ? o.get<std::string>() : std::to_string(o.get<int>());
    }
    if (j.contains("trials")) cfg.trials = j.at("trials").get<uint64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("fixture")) cfg.fixture = j.at("fixture").get<std::string>();
    if (j.contains("pipeline")) cfg.pipeline = j.at("pipeline").get<std::string>();
    if (j.contains("input")) cfg.input = j.at("input").get<std::string>();
    if (j.contains("erasures")) cfg.erasures = j.at("erasures").get<std::vector<uint32_t>>();
    if (j.contains("overload")) cfg.overload = j.at("overload").get<bool>();
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
    if (j.contains("workers")) cfg.workers = j.at("workers").get<unsigned>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ConfigError, e.what());
  } catch (const Error& e) {
    fail(ErrorCode::ConfigError, e.what());
  }
  option_number(cfg);
  if (cfg.pipeline != "time" && cfg.pipeline != "transform" && cfg.pipeline != "both")
    fail(ErrorCode::ConfigError, "pipeline must be time, transform or both");
  if (cfg.format != "json" && cfg.format != "text") fail(ErrorCode::ConfigError, "format must be json or text");
  return cfg;
}

FieldSpec config_field(const RunConfig& cfg) {
  return cfg.prim_poly ? make_field(cfg.m, cfg.prim_poly) : default_field(cfg.m);
}

CodeSpec config_code(const RunConfig& cfg) {
  const FieldSpec f = config_field(cfg);
  const uint32_t n = cfg.n ? cfg.n : f->n();
  const uint32_t k = cfg.k ? cfg.k : default_k(n);
  return make_code(f, n, k);
}

int option_number(const RunConfig& cfg) {
  if (cfg.option == "auto") return 0;
  if (cfg.option == "1") return 1;
  if (cfg.option == "2") return 2;
  fail(ErrorCode::ConfigError, "option must be 1, 2 or auto");
}

SupportSpec task_support(const CodeSpec& code, const std::string& task) {
  const uint32_t two_t = code.redundancy();
  const uint32_t t = code.t();
  if (task == "syndromes") return SupportSpec::spectral(SupportSpec::range(0, two_t - 1));
  if (task == "chien") return SupportSpec::temporal(SupportSpec::range(0, two_t));
  if (task == "forney_A") return SupportSpec::temporal(SupportSpec::range(0, two_t - 1));
  if (task == "tau_even") return SupportSpec::temporal(SupportSpec::range(0, t));
  if (task == "tau_odd_opt1") return SupportSpec::temporal(SupportSpec::range(1, two_t - 1, 2));
  if (task == "tau_odd_opt2") return SupportSpec::temporal(SupportSpec::range(0, t - 1));
  fail(ErrorCode::ConfigError, "task '" + task + "' has no single support");
}

Variant task_variant(const RunConfig& cfg, const std::string& task) {
  if (cfg.variant) return *cfg.variant;
  return task == "syndromes" || task == "full" ? Variant::SCFFT : Variant::DCFFT;
}

Json cmd_build(const RunConfig& cfg) {
  const CodeSpec code = config_code(cfg);
  const std::string task = cfg.tasks.empty() ? "full" : single_task(cfg);
  return to_json(full_plan_for(cfg, code, task));
}

Json cmd_reduce(const RunConfig& cfg) {
  const CodeSpec code = config_code(cfg);
  const std::string task = single_task(cfg);
  const ReducedPlan rp = reduced_for(cfg, code, task);
  Json j = to_json(rp);
  j["task"] = task;
  j["code"] = Json{{"n", code.n}, {"k", code.k}};
  j["mult_count"] = mult_count(rp);
  if (task != "full") {
    const RotationSearch rs = search_rotation(code.field, compute_cosets(code.n), task_variant(cfg, task),
                                              task_support(code, task));
    j["rotation_search"] = rs.struck;
  }
  return j;
}

Json cmd_cse(const RunConfig& cfg) {
  const CodeSpec code = config_code(cfg);
  const std::string task = single_task(cfg);
  const ReducedPlan rp = reduced_for(cfg, code, task);
  const PlanProgram naive = plan_to_slp(rp.base, names_for(task), false);
  const PlanProgram opt = plan_to_slp(rp.base, names_for(task), true);
  const int m = code.field->m();
  return Json{{"task", task},
              {"variant", to_string(rp.base.variant)},
              {"code", {{"n", code.n}, {"k", code.k}}},
              {"field", {{"m", m}, {"prim_poly", code.field->poly_hex()}}},
              {"mult", mult_count(rp)},
              {"naive", to_json(naive, m)},
              {"cse", to_json(opt, m)}};
}

TableReport cmd_report(const RunConfig& cfg) {
  const CodeSpec code = config_code(cfg);
  ReportOptions opts;
  opts.tasks = cfg.tasks;
  opts.syndrome_variant = cfg.variant.value_or(Variant::SCFFT);
  opts.option = option_number(cfg);
  return build_report(code, opts);
}

TrialSummary run_decode_trials(const DecoderPlans& plans, const TrialOptions& opts) {
  TrialSummary s;
  s.trials = opts.trials;
  if (opts.trials == 0) return s;
  std::vector<TrialOutcome> outcomes(opts.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(opts.trials)));
  auto work = [&](unsigned w) {
    for (uint64_t i = w; i < opts.trials; i += workers) outcomes[i] = one_trial(plans, opts, i);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& o : outcomes) {
    s.success += o.success;
    s.failure_flagged += o.flagged;
    s.miscorrections += o.miscorrected;
    s.disagreements += o.disagree;
  }
  return s;
}

Json cmd_decode(const RunConfig& cfg) {
  const CodeSpec code = config_code(cfg);
  const DecoderPlans plans(code);
  int opt = option_number(cfg);
  const ChienOption option =
      opt == 1 ? ChienOption::One
      : opt == 2 ? ChienOption::Two
                 : select_option(make_cost(code.field->m(), plans.odd_cost(ChienOption::One)),
                                 make_cost(code.field->m(), plans.odd_cost(ChienOption::Two)));
  Json j{{"code", {{"n", code.n}, {"k", code.k}}},
         {"field", {{"m", code.field->m()}, {"prim_poly", code.field->poly_hex()}}},
         {"pipeline", cfg.pipeline},
         {"option", option == ChienOption::One ? 1 : 2}};
  if (!cfg.input.empty()) {
    std::istringstream lines(read_text(cfg.input));
    std::string line;
    Json results = Json::array();
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
      const auto r = parse_hex_symbols(line, *code.field);
      if (r.size() != code.n) fail(ErrorCode::LengthMismatch, "received vector has " + std::to_string(r.size()) +
                                                                  " symbols, expected " + std::to_string(code.n));
      Json entry;
      if (cfg.pipeline != "transform") entry["time"] = to_json(decode_time_domain(r, cfg.erasures, plans, option));
      if (cfg.pipeline != "time") entry["transform"] = to_json(decode_transform_domain(r, cfg.erasures, plans));
      results.push_back(entry);
    }
    j["results"] = results;
    return j;
  }
  TrialOptions to;
  to.trials = cfg.trials;
  to.seed = cfg.seed;
  to.overload = cfg.overload;
  to.pipeline = cfg.pipeline;
  to.option = option;
  to.workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  const TrialSummary s = run_decode_trials(plans, to);
  j["seed"] = cfg.seed;
  j["overload"] = cfg.overload;
  j["summary"] = Json{{"trials", s.trials},
                      {"success", s.success},
                      {"failure_flagged", s.failure_flagged},
                      {"miscorrections", s.miscorrections},
                      {"disagreements", s.disagreements}};
  return j;
}

FixtureVerdict cmd_verify_fixture(const RunConfig& cfg) {
  const std::string path = cfg.fixture.empty() ? default_fixture_path() : cfg.fixture;
  return verify_fixture(load_fixture(path), cfg.trials ? cfg.trials : 1000, cfg.seed);
}

std::string cmd_emit_slp(const RunConfig& cfg) {
  const CodeSpec code = config_code(cfg);
  const std::string task = single_task(cfg);
  const ReducedPlan rp = reduced_for(cfg, code, task);
  const PlanProgram pp = plan_to_slp(rp.base, names_for(task), true);
  std::ostringstream os;
  const OpTally t = pp.slp.counts();
  os << "# " << task << ", " << to_string(rp.base.variant) << ", (" << code.n << "," << code.k << "), p(x) = "
     << code.field->poly_hex() << "\n";
  os << "# " << t.mult << " multiplications, " << pp.pre_counts.add << " + " << pp.post_counts.add
     << " additions\n";
  os << emit_slp_text(pp.slp, code.field.get());
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic FFT plans and Reed-Solomon decoders over GF(2^m)", "cfft"};
  app.fallthrough();
  app.require_subcommand(1);

  int m = 0;
  std::string prim_poly, code_str, variant, option, out_path, config_path, fixture, pipeline, input, format;
  std::vector<std::string> tasks;
  std::vector<uint32_t> erasures;
  uint64_t trials = 0, seed = 0;
  unsigned workers = 0;
  bool overload = false;

  auto* o_m = app.add_option("--m", m, "Field degree");
  auto* o_poly = app.add_option("--prim-poly", prim_poly, "Primitive polynomial, e.g. 0x11d");
  auto* o_code = app.add_option("--code", code_str, "Code as n,k");
  auto* o_variant = app.add_option("--variant", variant, "DCFFT or SCFFT");
  auto* o_task = app.add_option("--task", tasks, "Task name(s)")->delimiter(',');
  auto* o_option = app.add_option("--option", option, "Chien/Forney option: 1, 2 or auto");
  auto* o_trials = app.add_option("--trials", trials, "Number of trials");
  auto* o_seed = app.add_option("--seed", seed, "RNG seed");
  auto* o_out = app.add_option("--out", out_path, "Output file");
  app.add_option("--config", config_path, "JSON run configuration");
  auto* o_fixture = app.add_option("--fixture", fixture, "Fixture JSON");
  auto* o_pipeline = app.add_option("--pipeline", pipeline, "time, transform or both");
  auto* o_input = app.add_option("--input", input, "Received vectors, hex symbols, one per line");
  auto* o_erasures = app.add_option("--erasures", erasures, "Erasure positions")->delimiter(',');
  auto* o_overload = app.add_flag("--overload", overload, "Draw uncorrectable patterns");
  auto* o_format = app.add_option("--format", format, "json or text");
  auto* o_workers = app.add_option("--workers", workers, "Trial worker threads");

  const char* names[] = {"build", "reduce", "cse", "report", "decode", "verify-fixture", "emit-slp"};
  const char* help[] = {"Build a full CFFT plan",
                        "Build a partial or dual-partial plan",
                        "Compare naive and shared addition counts",
                        "Complexity table with published targets",
                        "Decode received vectors or run seeded trials",
                        "Check the shipped syndrome network",
                        "Print the optimized straight-line program"};
  std::vector<CLI::App*> subs;
  for (int i = 0; i < 7; ++i) subs.push_back(app.add_subcommand(names[i], help[i]));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = config_from_json(read_text(config_path));
    if (o_m->count()) cfg.m = m;
    if (o_poly->count()) cfg.prim_poly = parse_poly(prim_poly);
    if (o_code->count()) {
      std::tie(cfg.n, cfg.k) = parse_code(code_str);
      if (!o_m->count()) cfg.m = degree_for_n(cfg.n);
    }
    if (o_variant->count()) cfg.variant = parse_variant(variant);
    if (o_task->count()) cfg.tasks = tasks;
    if (o_option->count()) cfg.option = option;
    if (o_trials->count()) cfg.trials = trials;
    if (o_seed->count()) cfg.seed = seed;
    if (o_out->count()) cfg.out = out_path;
    if (o_fixture->count()) cfg.fixture = fixture;
    if (o_pipeline->count()) cfg.pipeline = pipeline;
    if (o_input->count()) cfg.input = input;
    if (o_erasures->count()) cfg.erasures = erasures;
    if (o_overload->count()) cfg.overload = overload;
    if (o_format->count()) cfg.format = format;
    if (o_workers->count()) cfg.workers = workers;
    option_number(cfg);
    if (cfg.pipeline != "time" && cfg.pipeline != "transform" && cfg.pipeline != "both")
      fail(ErrorCode::ConfigError, "pipeline must be time, transform or both");

    const std::string cmd = app.get_subcommands().front()->get_name();
    const auto dump = [&](const Json& j) { write_or_print(cfg, j.dump(2) + "\n", out); };
    if (cmd == "build") {
      dump(cmd_build(cfg));
    } else if (cmd == "reduce") {
      dump(cmd_reduce(cfg));
    } else if (cmd == "cse") {
      dump(cmd_cse(cfg));
    } else if (cmd == "report") {
      const TableReport rep = cmd_report(cfg);
      if (cfg.format == "text") write_or_print(cfg, render_table(rep), out);
      else dump(to_json(rep));
    } else if (cmd == "decode") {
      dump(cmd_decode(cfg));
    } else if (cmd == "verify-fixture") {
      const FixtureVerdict v = cmd_verify_fixture(cfg);
      dump(to_json(v));
      return v.passed ? 0 : 1;
    } else if (cmd == "emit-slp") {
      write_or_print(cfg, cmd_emit_slp(cfg), out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace cfft
