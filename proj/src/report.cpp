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

#include "cfft/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "cfft/error.hpp"
#include "cfft/reduction.hpp"

namespace cfft {

namespace {

PublishedCell cell(const char* table, uint32_t n, const char* key, const char* column, const char* label,
                   uint64_t mult, uint64_t add, uint64_t div, uint64_t total) {
  return PublishedCell{table, n, key, column, label, mult, add, div, total};
}

int field_degree(uint32_t n) {
  int m = 0;
  while ((uint32_t{1} << m) - 1 < n) ++m;
  return m;
}

// Totals not printed in the tables are filled from the cost formula.
PublishedCell derived(const char* table, uint32_t n, const char* key, const char* column, const char* label,
                      uint64_t mult, uint64_t add, uint64_t div) {
  const uint64_t total = make_cost(field_degree(n), mult, add, div).total;
  return cell(table, n, key, column, label, mult, add, div, total);
}

std::vector<PublishedCell> make_cells() {
  std::vector<PublishedCell> c;
  // Syndrome computation.
  c.push_back(derived("I", 255, "syndromes", "horner", "Horner", 7874, 8128, 0));
  c.push_back(derived("I", 255, "syndromes", "ref-zakharova", "fast DFT", 167, 5440, 0));
  c.push_back(derived("I", 255, "syndromes", "ref-costa", "prior ICFFT", 149, 5046, 0));
  c.push_back(derived("I", 255, "syndromes", "ref-jeng", "inverse-free decoder", 8160, 8128, 0));
  c.push_back(derived("I", 255, "syndromes", "ref-lin", "fast syndrome", 3060, 4998, 0));
  c.push_back(cell("I", 255, "syndromes", "ref-truong", "prime-factor FFT", 852, 1804, 0, 14584));
  c.push_back(cell("I", 255, "syndromes", "ours-scfft", "SCFFT/ICFFT", 149, 3970, 0, 6205));
  c.push_back(cell("I", 255, "syndromes", "ours-dcfft", "DCFFT", 586, 2850, 0, 11640));
  c.push_back(derived("I", 511, "syndromes", "horner", "Horner", 32130, 32640, 0));
  c.push_back(derived("I", 511, "syndromes", "ref-jeng", "inverse-free decoder", 32704, 32640, 0));
  c.push_back(derived("I", 511, "syndromes", "ref-lin", "fast syndrome", 9888, 17819, 0));
  c.push_back(cell("I", 511, "syndromes", "ref-truong", "prime-factor FFT", 5265, 7309, 0, 35496));
  c.push_back(cell("I", 511, "syndromes", "ours-scfft", "SCFFT/ICFFT", 345, 16471, 0, 22336));
  c.push_back(cell("I", 511, "syndromes", "ours-dcfft", "DCFFT", 1014, 7904, 0, 25142));
  c.push_back(derived("I", 1023, "syndromes", "horner", "Horner", 129794, 130816, 0));
  c.push_back(derived("I", 1023, "syndromes", "ref-jeng", "inverse-free decoder", 130944, 130816, 0));
  c.push_back(derived("I", 1023, "syndromes", "ref-lin", "fast syndrome", 33620, 73185, 0));
  c.push_back(cell("I", 1023, "syndromes", "ref-truong", "prime-factor FFT", 6785, 15775, 0, 144690));
  c.push_back(cell("I", 1023, "syndromes", "ours-scfft", "SCFFT/ICFFT", 824, 60741, 0, 76397));
  c.push_back(cell("I", 1023, "syndromes", "ours-dcfft", "DCFFT", 2827, 25118, 0, 78831));

  // Combined Chien search and Forney.
  struct ChienRow {
    uint32_t n;
    uint64_t v[6][3][4];  // row x {dcfft, scfft, horner} x {mult, add, div, total}
    uint64_t ref[4];
  };
  const ChienRow rows[] = {
      {255,
       {{{149, 3226, 0, 5461}, {586, 2628, 0, 11418}, {992, 992, 0, 15872}},
        {{78, 1828, 0, 2998}, {586, 1990, 0, 10780}, {4080, 4080, 0, 65280}},
        {{108, 3096, 0, 4716}, {586, 1970, 0, 10760}, {4080, 3825, 0, 65025}},
        {{330, 1827, 0, 6777}, {841, 1955, 0, 14570}, {4080, 3825, 0, 65025}},
        {{0, 255, 32, 735}, {0, 255, 32, 735}, {0, 255, 32, 735}},
        {{335, 8405, 32, 13910}, {1758, 6843, 32, 33693}, {9152, 9152, 32, 146912}}},
       {15810, 16575, 32, 254205}},
      {511,
       {{{345, 12791, 0, 18656}, {1014, 7767, 0, 25005}, {4032, 4032, 0, 72576}},
        {{177, 7802, 0, 10811}, {1014, 5299, 0, 22537}, {16352, 16352, 0, 294336}},
        {{248, 12533, 0, 16749}, {1014, 5332, 0, 22570}, {16352, 15841, 0, 293825}},
        {{687, 7809, 0, 19488}, {1525, 5243, 0, 31168}, {16352, 15841, 0, 293825}},
        {{0, 511, 64, 1599}, {0, 511, 64, 1599}, {0, 511, 64, 1599}},
        {{770, 33637, 64, 47815}, {3042, 18909, 64, 71711}, {36736, 36736, 64, 662336}}},
       {64386, 65919, 64, 1161569}},
      {1023,
       {{{824, 52557, 0, 68213}, {2827, 24806, 0, 78519}, {16256, 16256, 0, 325120}},
        {{430, 30294, 0, 38464}, {2827, 16517, 0, 70230}, {65472, 65472, 0, 1309440}},
        {{541, 51655, 0, 61934}, {2827, 16647, 0, 70360}, {65472, 64449, 0, 1308417}},
        {{1452, 30244, 0, 57832}, {3850, 16407, 0, 89557}, {65472, 64449, 0, 1308417}},
        {{0, 1023, 128, 3455}, {0, 1023, 128, 3455}, {0, 1023, 128, 3455}},
        {{2706, 114118, 128, 167964}, {8481, 58993, 128, 222564}, {147200, 147200, 128, 2946432}}},
       {259842, 262911, 128, 5202341}},
  };
  const char* keys[6] = {"forney_A", "tau_even", "tau_odd_opt1", "tau_odd_opt2", "misc", "chien"};
  const char* labels[6] = {"A(x)", "tau_e(x^2)", "x tau_o(x^2) option 1", "x tau_o(x^2) option 2", "Misc", "Sum"};
  const char* cols[3] = {"ours-dcfft", "ours-scfft", "horner"};
  for (const auto& r : rows) {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 3; ++j)
        c.push_back(cell("II", r.n, keys[i], cols[j], labels[i], r.v[i][j][0], r.v[i][j][1], r.v[i][j][2],
                         r.v[i][j][3]));
    c.push_back(cell("II", r.n, "chien", "ref-jeng", "Sum", r.ref[0], r.ref[1], r.ref[2], r.ref[3]));
  }

  // Transform- and time-domain decoders.
  struct DecoderRow {
    const char* key;
    const char* column;
    const char* label;
    uint64_t v[3][4];  // n = 255, 511, 1023
  };
  const DecoderRow drows[] = {
      {"inverse", "ref-truong", "T.4", {{1135, 3887, 0, 20912}, {6516, 17506, 0, 128278}, {5915, 30547, 0, 142932}}},
      {"inverse", "ours", "T.4", {{586, 6736, 0, 15526}, {1014, 23130, 0, 40368}, {2827, 75360, 0, 129073}}},
      {"transform", "ref-truong", "T.1+T.4",
       {{1987, 5691, 0, 35496}, {11781, 24815, 0, 225092}, {12700, 46322, 0, 287622}}},
      {"transform", "ours", "T.1+T.4", {{735, 10706, 0, 21731}, {1359, 39601, 0, 62704}, {3651, 136101, 0, 205470}}},
      {"time", "ref-jeng", "t.1+t.4",
       {{23970, 24703, 32, 384733}, {97090, 98559, 64, 1750177}, {390786, 393727, 128, 7821093}}},
      {"time", "ours", "t.1+t.4", {{484, 12375, 32, 20115}, {1115, 50108, 64, 70151}, {3530, 174859, 128, 244361}}},
      {"bma", "all", "T.2/t.2", {{353, 288, 0, 5583}, {1217, 1088, 0, 21777}, {4481, 4224, 0, 89363}}},
      {"extension", "all", "T.3", {{7136, 6913, 0, 113953}, {28608, 28161, 0, 514497}, {114560, 113665, 0, 2290305}}},
      {"transform_all", "ref-truong", "T.1+T.2+T.3+T.4",
       {{9476, 12892, 0, 155032}, {41606, 54064, 0, 761366}, {131741, 164211, 0, 2667290}}},
      {"transform_all", "ours", "T.1+T.2+T.3+T.4",
       {{8224, 17907, 0, 141267}, {31184, 68850, 0, 598978}, {122692, 253990, 0, 2585138}}},
      {"evaluator", "all", "t.3", {{1089, 1024, 0, 17359}, {4225, 4096, 0, 75921}, {16641, 16384, 0, 332563}}},
      {"time_all", "ref-jeng", "t.1+t.2+t.3+t.4",
       {{25412, 26015, 32, 407675}, {102532, 103743, 64, 1847875}, {411908, 414335, 128, 8243019}}},
      {"time_all", "ours", "t.1+t.2+t.3+t.4",
       {{1926, 12679, 32, 42049}, {6557, 55292, 64, 167849}, {24652, 195467, 128, 666287}}},
  };
  const uint32_t ns[3] = {255, 511, 1023};
  for (const auto& r : drows)
    for (int i = 0; i < 3; ++i)
      c.push_back(cell("III", ns[i], r.key, r.column, r.label, r.v[i][0], r.v[i][1], r.v[i][2], r.v[i][3]));
  return c;
}

ReportRow make_row(const std::string& key, const std::string& label, int m, const OpTally& t,
                   std::optional<PublishedCell> target) {
  return ReportRow{key, label, make_cost(m, t), std::move(target)};
}

bool needs_decoder(const std::vector<std::string>& tasks) {
  for (const auto& t : tasks)
    if (t != "syndromes") return true;
  return false;
}

void check_tasks(const std::vector<std::string>& tasks) {
  const auto& known = report_task_keys();
  for (const auto& t : tasks)
    if (std::find(known.begin(), known.end(), t) == known.end())
      fail(ErrorCode::ConfigError, "unknown report task '" + t + "'");
}

struct SyndromeRows {
  OpTally ops;
  uint64_t extractions = 0;
  std::vector<uint32_t> kernels;
};

SyndromeRows syndrome_rows(const CodeSpec& code, Variant v, const DecoderPlans* plans) {
  SyndromeRows s;
  const SupportSpec sup = SupportSpec::spectral(SupportSpec::range(0, code.redundancy() - 1));
  if (plans && v == Variant::SCFFT) {
    s.ops = plans->syndrome_cost();
    s.extractions = plans->syndrome_program().slp.extractions;
  } else {
    const ReducedPlan rp = build_reduced_plan(code.field, v, sup);
    const PlanProgram pp = plan_to_slp(rp.base);
    s.ops = pp.slp.counts();
    s.extractions = pp.slp.extractions;
  }
  return s;
}

void add_kernels(TableReport& rep, const CfftPlan& plan) {
  std::set<uint32_t> ks(rep.kernels.begin(), rep.kernels.end());
  for (uint32_t c : plan.slot_coset) ks.insert(plan.cosets.cosets[c].size());
  rep.kernels.assign(ks.begin(), ks.end());
}

TableReport report_impl(const CodeSpec& code, const DecoderPlans* plans, const ReportOptions& opts) {
  check_tasks(opts.tasks);
  const int m = code.field->m();
  const uint32_t n = code.n;
  TableReport rep;
  rep.title = "Complexity report (" + std::to_string(n) + "," + std::to_string(code.k) + ")";
  rep.m = m;
  rep.prim_poly = code.field->poly_hex();
  rep.n = n;
  rep.k = code.k;
  if (opts.tasks.empty()) return rep;

  if (plans) {
    add_kernels(rep, plans->syndrome_plan().base);
    add_kernels(rep, plans->full_plan());
  }

  ChienOption chosen = ChienOption::One;
  if (plans) {
    chosen = opts.option == 1   ? ChienOption::One
             : opts.option == 2 ? ChienOption::Two
                                : select_option(make_cost(m, plans->odd_cost(ChienOption::One)),
                                                make_cost(m, plans->odd_cost(ChienOption::Two)));
  }
  auto odd_key = [](ChienOption o) { return o == ChienOption::One ? "tau_odd_opt1" : "tau_odd_opt2"; };
  auto chien_sum = [&]() {
    return plans->a_cost() + plans->tau_even_cost() + plans->odd_cost(chosen) + plans->misc_cost();
  };

  for (const auto& task : opts.tasks) {
    if (task == "syndromes") {
      const Variant v = opts.syndrome_variant;
      const SyndromeRows s = syndrome_rows(code, v, plans);
      rep.cse_extractions += s.extractions;
      if (!plans) add_kernels(rep, build_reduced_plan(code.field, v, SupportSpec::spectral(
                                                                          SupportSpec::range(0, code.redundancy() - 1)))
                                       .base);
      const char* col = v == Variant::SCFFT ? "ours-scfft" : "ours-dcfft";
      rep.rows.push_back(make_row("syndromes", std::string("Syndromes, ") + to_string(v), m, s.ops,
                                  find_published(n, "syndromes", col)));
      rep.rows.push_back(make_row("syndromes", "Syndromes, Horner", m, horner_cost(n, code.redundancy(), true),
                                  find_published(n, "syndromes", "horner")));
    } else if (task == "forney_A") {
      rep.rows.push_back(make_row(task, "A(x)", m, plans->a_cost(), find_published(n, task)));
    } else if (task == "tau_even") {
      rep.rows.push_back(make_row(task, "tau_e(x^2)", m, plans->tau_even_cost(), find_published(n, task)));
    } else if (task == "tau_odd_opt1") {
      rep.rows.push_back(make_row(task, "x tau_o(x^2) option 1", m, plans->odd_cost(ChienOption::One),
                                  find_published(n, task)));
    } else if (task == "tau_odd_opt2") {
      rep.rows.push_back(make_row(task, "x tau_o(x^2) option 2", m, plans->odd_cost(ChienOption::Two),
                                  find_published(n, task)));
    } else if (task == "chien") {
      rep.rows.push_back(make_row("forney_A", "A(x)", m, plans->a_cost(), find_published(n, "forney_A")));
      rep.rows.push_back(make_row("tau_even", "tau_e(x^2)", m, plans->tau_even_cost(), find_published(n, "tau_even")));
      rep.rows.push_back(make_row(odd_key(chosen),
                                  std::string("x tau_o(x^2) option ") + (chosen == ChienOption::One ? "1" : "2"), m,
                                  plans->odd_cost(chosen), find_published(n, odd_key(chosen))));
      rep.rows.push_back(make_row("misc", "Misc", m, plans->misc_cost(), find_published(n, "misc")));
      rep.rows.push_back(make_row("chien", "Sum", m, chien_sum(), find_published(n, "chien")));
    } else if (task == "full") {
      rep.rows.push_back(make_row("inverse", "T.4 full SCFFT", m, plans->full_cost(), find_published(n, "inverse", "ours")));
      rep.rows.push_back(make_row("transform", "T.1+T.4", m, plans->syndrome_cost() + plans->full_cost(),
                                  find_published(n, "transform", "ours")));
    } else if (task == "decode") {
      rep.rows.push_back(make_row("time", "t.1+t.4", m, plans->syndrome_cost() + chien_sum(),
                                  find_published(n, "time", "ours")));
      rep.rows.push_back(make_row("transform", "T.1+T.4", m, plans->syndrome_cost() + plans->full_cost(),
                                  find_published(n, "transform", "ours")));
    }
  }
  if (plans) {
    for (const PlanProgram* pp : {&plans->a_program(), &plans->tau_even_program(),
                                  &plans->odd_program(ChienOption::One), &plans->odd_program(ChienOption::Two),
                                  &plans->full_program()})
      rep.cse_extractions += pp->slp.extractions;
  }
  for (const auto& pc : published_cells())
    if (pc.n == n && pc.column.rfind("ref-", 0) == 0)
      rep.notes.push_back("reference " + pc.column.substr(4) + " (table " + pc.table + ", " + pc.key +
                          "): mult " + std::to_string(pc.mult) + ", add " + std::to_string(pc.add) + ", div " +
                          std::to_string(pc.div) + ", total " + std::to_string(pc.total));
  return rep;
}

}  // namespace

const std::vector<PublishedCell>& published_cells() {
  static const std::vector<PublishedCell> cells = make_cells();
  return cells;
}

std::optional<PublishedCell> find_published(uint32_t n, const std::string& key, const std::string& column) {
  for (const auto& c : published_cells())
    if (c.n == n && c.key == key && c.column == column) return c;
  return std::nullopt;
}

const std::vector<std::string>& report_task_keys() {
  static const std::vector<std::string> keys = {"syndromes", "forney_A", "tau_even", "tau_odd_opt1",
                                                "tau_odd_opt2", "chien", "full", "decode"};
  return keys;
}

TableReport build_report(const CodeSpec& code, const ReportOptions& opts) {
  check_tasks(opts.tasks);
  if (!needs_decoder(opts.tasks)) return report_impl(code, nullptr, opts);
  const DecoderPlans plans(code);
  return report_impl(code, &plans, opts);
}

TableReport build_report(const DecoderPlans& plans, const ReportOptions& opts) {
  return report_impl(plans.code(), &plans, opts);
}

CostDelta delta(const ReportRow& row) {
  CostDelta d;
  if (!row.target) return d;
  d.mult = static_cast<int64_t>(row.cost.n_mult) - static_cast<int64_t>(row.target->mult);
  d.add = static_cast<int64_t>(row.cost.n_add) - static_cast<int64_t>(row.target->add);
  d.div = static_cast<int64_t>(row.cost.n_div) - static_cast<int64_t>(row.target->div);
  d.total = static_cast<int64_t>(row.cost.total) - static_cast<int64_t>(row.target->total);
  return d;
}

std::string render_table(const TableReport& rep) {
  std::ostringstream os;
  char buf[256];
  os << rep.title << ", m = " << rep.m << ", p(x) = " << rep.prim_poly << "\n";
  std::snprintf(buf, sizeof buf, "%-26s %8s %8s %6s %9s | %8s %8s %6s %9s | %9s\n", "row", "mult", "add", "div",
                "total", "t.mult", "t.add", "t.div", "t.total", "d.total");
  os << buf;
  for (const auto& r : rep.rows) {
    const auto& c = r.cost;
    if (r.target) {
      const auto d = delta(r);
      std::snprintf(buf, sizeof buf, "%-26s %8llu %8llu %6llu %9llu | %8llu %8llu %6llu %9llu | %+9lld\n",
                    r.label.c_str(), (unsigned long long)c.n_mult, (unsigned long long)c.n_add,
                    (unsigned long long)c.n_div, (unsigned long long)c.total, (unsigned long long)r.target->mult,
                    (unsigned long long)r.target->add, (unsigned long long)r.target->div,
                    (unsigned long long)r.target->total, (long long)d.total);
    } else {
      std::snprintf(buf, sizeof buf, "%-26s %8llu %8llu %6llu %9llu | %8s %8s %6s %9s | %9s\n", r.label.c_str(),
                    (unsigned long long)c.n_mult, (unsigned long long)c.n_add, (unsigned long long)c.n_div,
                    (unsigned long long)c.total, "-", "-", "-", "-", "-");
    }
    os << buf;
  }
  return os.str();
}

}  // namespace cfft
