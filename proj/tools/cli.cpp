// Copyright 2026 The k3count Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "k3count/arith.hpp"
#include "k3count/bounds.hpp"
#include "k3count/lattice.hpp"
#include "k3count/mukai.hpp"
#include "k3count/parallel.hpp"
#include "k3count/pell_cert.hpp"
#include "k3count/suites.hpp"
#include "k3count/walls.hpp"

namespace k3::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  Format format = Format::Text;
  unsigned jobs = 1;
  std::string out_path;
};

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
ordered_json json_int(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

ordered_json json_divisor(const DivisorClass& d) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : d.coeffs()) coeffs.push_back(json_int(c));
  return coeffs;
}

ordered_json json_vector(const MukaiVector& v) {
  return ordered_json{{"rk", json_int(v.rk)}, {"c1", json_divisor(v.c1)}, {"s", json_int(v.s)}};
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

Integer parse_integer(const std::string& text, const char* what) {
  Integer value;
  std::string body = text;
  if (!body.empty() && body.front() == '+') body.erase(0, 1);
  if (body.empty() || value.set_str(body, 10) != 0) {
    throw UsageError(std::string("malformed ") + what + " '" + text + "'");
  }
  return value;
}

ReducedFraction parse_fraction(const std::string& text) {
  try {
    return ReducedFraction::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

// "(r, D, s)" is a Mukai vector; anything else is a divisor D read as v(O(D)).
MukaiVector parse_twist_object(const std::string& text) {
  const LatticePtr lattice = NSLattice::elliptic();
  const std::string body = trim(text);
  try {
    if (body.empty() || body.front() != '(') {
      return line_bundle_vector(parse_divisor(lattice, body));
    }
    if (body.back() != ')') throw UsageError("unterminated vector '" + text + "'");
    std::vector<std::string> parts;
    std::stringstream in(body.substr(1, body.size() - 2));
    for (std::string part; std::getline(in, part, ',');) parts.push_back(trim(part));
    if (parts.size() != 3) throw UsageError("vector '" + text + "' needs three entries");
    return MukaiVector{parse_integer(parts[0], "rank"), parse_divisor(lattice, parts[1]),
                       parse_integer(parts[2], "vector entry")};
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Integer> parse_cf_terms(const std::string& text) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw UsageError("continued fraction must look like [a1,a2,...], got '" + text + "'");
  }
  std::vector<Integer> terms;
  std::stringstream in(body.substr(1, body.size() - 2));
  for (std::string part; std::getline(in, part, ',');) {
    Integer term = parse_integer(trim(part), "continued fraction term");
    if (term <= 0) throw UsageError("continued fraction terms must be positive");
    terms.push_back(term);
  }
  if (terms.empty()) throw UsageError("continued fraction needs at least one term");
  return terms;
}

std::string h_label(const ReducedFraction& a) { return "H(" + a.str() + ")"; }

// ---- count ----------------------------------------------------------------

int cmd_count(const std::string& fraction, bool show_walls, const Options& opt,
              std::ostream& out) {
  const ReducedFraction a = parse_fraction(fraction);
  const CountReport report = count_chambers(a.value());
  std::map<std::size_t, std::vector<const Destabilizer*>> by_wall;
  for (const auto& d : report.destabilizers) {
    const auto it = std::find(report.walls.begin(), report.walls.end(), d.wall);
    by_wall[static_cast<std::size_t>(it - report.walls.begin())].push_back(&d);
  }
  auto destabilizer_text = [](const Destabilizer& d) {
    return "(" + d.slope.str() + "," + d.k.get_str() + ")";
  };

  switch (opt.format) {
    case Format::Json: {
      ordered_json walls = ordered_json::array();
      for (std::size_t i = 0; i < report.walls.size(); ++i) {
        ordered_json dests = ordered_json::array();
        for (const Destabilizer* d : by_wall[i]) {
          dests.push_back(ordered_json{{"slope", d->slope.str()},
                                       {"k", json_int(d->k)},
                                       {"vector", json_vector(d->vector)}});
        }
        walls.push_back(ordered_json{{"delta", json_divisor(report.walls[i].delta)},
                                     {"c", to_string(report.walls[i].position)},
                                     {"destabilizers", dests}});
      }
      ordered_json doc{{"input", a.str()},
                       {"target", report.target.slope().str()},
                       {"h", report.h_value},
                       {"walls", walls}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      if (show_walls) {
        out << "delta,c,destabilizers\n";
        for (std::size_t i = 0; i < report.walls.size(); ++i) {
          std::string dests;
          for (const Destabilizer* d : by_wall[i]) {
            dests += (dests.empty() ? "" : " ") + destabilizer_text(*d);
          }
          out << csv_field(report.walls[i].delta.str()) << ','
              << to_string(report.walls[i].position) << ',' << csv_field(dests) << '\n';
        }
      } else {
        out << "n,m,h\n"
            << a.num().get_str() << ',' << a.den().get_str() << ',' << report.h_value << '\n';
      }
      break;
    case Format::Text:
      out << h_label(a) << " = " << report.h_value << '\n';
      if (show_walls) {
        for (std::size_t i = 0; i < report.walls.size(); ++i) {
          out << "  wall " << report.walls[i].delta.str()
              << "  c = " << to_string(report.walls[i].position) << " ";
          for (const Destabilizer* d : by_wall[i]) out << ' ' << destabilizer_text(*d);
          out << '\n';
        }
      }
      break;
  }
  return kSuccess;
}

// ---- table ----------------------------------------------------------------

int cmd_table(std::uint64_t max_m, const Options& opt, std::ostream& out) {
  if (max_m < 2) throw UsageError("--max-m must be at least 2");
  std::vector<ReducedFraction> rows;
  for (std::uint64_t m = 2; m <= max_m; ++m) {
    for (std::uint64_t n = 1; 2 * n <= m; ++n) {
      if (std::gcd(n, m) == 1) rows.push_back(ReducedFraction::from_reduced(n, m));
    }
  }
  const auto hs = parallel_map(rows.size(), opt.jobs,
                               [&](std::size_t i) { return chamber_count(rows[i].value()); });
  switch (opt.format) {
    case Format::Json: {
      ordered_json doc = ordered_json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        doc.push_back(ordered_json{
            {"m", json_int(rows[i].den())}, {"n", json_int(rows[i].num())}, {"h", hs[i]}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "m,n,h\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out << rows[i].den().get_str() << ',' << rows[i].num().get_str() << ',' << hs[i] << '\n';
      }
      break;
    case Format::Text:
      for (std::size_t i = 0; i < rows.size(); ++i) {
        out << h_label(rows[i]) << " = " << hs[i] << '\n';
      }
      break;
  }
  return kSuccess;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& suites, const Options& opt, std::ostream& out) {
  std::vector<SuiteResult> results;
  for (const auto& name : suites) results.push_back(run_suite(name, opt.jobs));
  bool all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed();

  switch (opt.format) {
    case Format::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& r : results) {
        ordered_json checks = ordered_json::array();
        for (const auto& line : r.lines) {
          checks.push_back(ordered_json{
              {"name", line.name}, {"passed", line.passed}, {"detail", line.detail}});
        }
        doc.push_back(ordered_json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "suite,check,passed,detail\n";
      for (const auto& r : results) {
        for (const auto& line : r.lines) {
          out << csv_field(r.suite) << ',' << csv_field(line.name) << ','
              << (line.passed ? "true" : "false") << ',' << csv_field(line.detail) << '\n';
        }
      }
      break;
    case Format::Text:
      for (const auto& r : results) {
        for (const auto& line : r.lines) {
          out << (line.passed ? "PASS  " : "FAIL  ") << r.suite << ": " << line.name << "  ["
              << line.detail << "]\n";
        }
        out << r.suite << ": " << (r.lines.size() - r.failures()) << "/" << r.lines.size()
            << " checks passed\n";
      }
      break;
  }
  return all_passed ? kSuccess : kVerificationFailed;
}

// ---- stats ----------------------------------------------------------------

int cmd_stats(std::uint64_t min_m, std::uint64_t max_m, const Options& opt, std::ostream& out) {
  if (min_m < 2 || max_m < min_m) throw UsageError("need 2 <= --min-m <= --max-m");
  const auto rows = h_stats_range(min_m, max_m, opt.jobs);
  switch (opt.format) {
    case Format::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& r : rows) {
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
        doc.push_back(ordered_json{{"m", json_int(r.m)},
                                   {"phi", json_int(r.phi)},
                                   {"h_min", json_int(r.h_min)},
                                   {"h_ave", to_string(r.h_ave)},
                                   {"h_sum", json_int(r.h_sum)},
                                   {"ratio", ordered_json::parse(ratio)}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
    case Format::Text:
      out << stats_csv_header() << '\n';
      for (const auto& r : rows) out << stats_csv_line(r) << '\n';
      break;
  }
  return kSuccess;
}

// ---- gsum -----------------------------------------------------------------

int cmd_gsum(const std::string& m_text, const std::string& r_text, const Options& opt,
             std::ostream& out) {
  const Integer m = parse_integer(m_text, "m");
  if (m < 2) throw UsageError("m must be at least 2");
  if (!r_text.empty()) {
    const Integer r = parse_integer(r_text, "r");
    if (r < 1 || r >= m) throw UsageError("r must satisfy 1 <= r < m");
    const Integer g = g_sum(m, r);
    switch (opt.format) {
      case Format::Json:
        out << ordered_json{{"m", json_int(m)}, {"r", json_int(r)}, {"g", json_int(g)}}.dump(2)
            << '\n';
        break;
      case Format::Csv:
        out << "m,r,g\n" << m.get_str() << ',' << r.get_str() << ',' << g.get_str() << '\n';
        break;
      case Format::Text:
        out << "G(" << m.get_str() << "," << r.get_str() << ") = " << g.get_str() << '\n';
        break;
    }
    return kSuccess;
  }
  const Integer g = g_total(m);
  const Integer gp = g_prime(m);
  switch (opt.format) {
    case Format::Json:
      out << ordered_json{{"m", json_int(m)}, {"g", json_int(g)}, {"g_prime", json_int(gp)}}.dump(2)
          << '\n';
      break;
    case Format::Csv:
      out << "m,g,g_prime\n" << m.get_str() << ',' << g.get_str() << ',' << gp.get_str() << '\n';
      break;
    case Format::Text:
      out << "G(" << m.get_str() << ") = " << g.get_str() << '\n'
          << "G'(" << m.get_str() << ") = " << gp.get_str() << '\n';
      break;
  }
  return kSuccess;
}

// ---- pell -----------------------------------------------------------------

int cmd_pell(std::size_t count, const Options& opt, std::ostream& out) {
  if (count < 1) throw UsageError("--count must be at least 1");
  const auto certs = certify_family(count);
  bool all_passed = true;
  for (const auto& c : certs) all_passed = all_passed && c.all_passed();

  switch (opt.format) {
    case Format::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& c : certs) {
        ordered_json checks = ordered_json::array();
        for (const auto& chk : c.checks) {
          checks.push_back(ordered_json{{"name", chk.name},
                                        {"actual", to_string(chk.actual)},
                                        {"expected", to_string(chk.expected)},
                                        {"passed", chk.passed}});
        }
        doc.push_back(ordered_json{{"a", json_int(c.solution.x)},
                                   {"b", json_int(c.solution.y)},
                                   {"D", c.d.str()},
                                   {"E", c.e.str()},
                                   {"H", c.h.str()},
                                   {"v", json_vector(c.bundle_vector)},
                                   {"certified", c.all_passed()},
                                   {"checks", checks}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "a,b,check,actual,expected,passed\n";
      for (const auto& c : certs) {
        for (const auto& chk : c.checks) {
          out << c.solution.x.get_str() << ',' << c.solution.y.get_str() << ','
              << csv_field(chk.name) << ',' << to_string(chk.actual) << ','
              << to_string(chk.expected) << ',' << (chk.passed ? "true" : "false") << '\n';
        }
      }
      break;
    case Format::Text:
      for (const auto& c : certs) {
        out << "(a,b) = (" << c.solution.x.get_str() << "," << c.solution.y.get_str() << ")  "
            << (c.all_passed() ? "certified" : "FAILED") << "  D = " << c.d.str()
            << "  E = " << c.e.str() << "  H = " << c.h.str() << "  v(V) = "
            << c.bundle_vector.str() << '\n';
        for (const auto& chk : c.checks) {
          if (!chk.passed) {
            out << "  failed " << chk.name << ": " << to_string(chk.actual)
                << " != " << to_string(chk.expected) << '\n';
          }
        }
      }
      break;
  }
  return all_passed ? kSuccess : kVerificationFailed;
}

// ---- twist ----------------------------------------------------------------

int cmd_twist(const std::vector<std::string>& objects, const Options& opt, std::ostream& out) {
  if (objects.empty()) throw UsageError("twist needs a starting object");
  MukaiVector current = parse_twist_object(objects.front());
  const MukaiVector start = current;
  std::vector<std::pair<MukaiVector, MukaiVector>> steps;
  for (std::size_t i = 1; i < objects.size(); ++i) {
    const MukaiVector center = parse_twist_object(objects[i]);
    if (!is_spherical(center)) {
      throw UsageError("twist center " + center.str() + " is not spherical");
    }
    current = twist_reflect(center, current);
    steps.emplace_back(center, current);
  }

  switch (opt.format) {
    case Format::Json: {
      ordered_json chain = ordered_json::array();
      for (const auto& [center, result] : steps) {
        chain.push_back(ordered_json{{"center", json_vector(center)}, {"result", json_vector(result)}});
      }
      out << ordered_json{{"start", json_vector(start)},
                          {"steps", chain},
                          {"result", json_vector(current)},
                          {"spherical", is_spherical(current)}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::Csv:
      out << "step,center,result\n0,," << csv_field(start.str()) << '\n';
      for (std::size_t i = 0; i < steps.size(); ++i) {
        out << i + 1 << ',' << csv_field(steps[i].first.str()) << ','
            << csv_field(steps[i].second.str()) << '\n';
      }
      break;
    case Format::Text:
      out << "start " << start.str() << '\n';
      for (const auto& [center, result] : steps) {
        out << "twist by " << center.str() << " -> " << result.str() << '\n';
      }
      out << "result " << current.str() << '\n';
      break;
  }
  return kSuccess;
}

// ---- cf -------------------------------------------------------------------

int cmd_cf(const std::string& text, const Options& opt, std::ostream& out) {
  const std::vector<Integer> terms = parse_cf_terms(text);
  const ReducedFraction value = cf_value(terms);
  const std::size_t h = chamber_count(value.value());
  switch (opt.format) {
    case Format::Json:
      out << ordered_json{{"value", value.str()}, {"h", h}}.dump(2) << '\n';
      break;
    case Format::Csv:
      out << "value,h\n" << value.str() << ',' << h << '\n';
      break;
    case Format::Text:
      out << value.str() << '\n' << h_label(value) << " = " << h << '\n';
      break;
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts slope-stable spherical bundles on a generic elliptic K3 surface."};
  app.name("k3count");
  app.require_subcommand(1);

  Options opt;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs,-j", opt.jobs, "Worker threads; 0 uses every core")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out,-o", opt.out_path, "Write results to this file");

  std::string count_fraction;
  bool count_walls = false;
  auto* count = app.add_subcommand("count", "Chamber count H(n/m)");
  count->add_option("fraction", count_fraction, "n/m or an integer")->required();
  count->add_flag("--walls", count_walls, "List walls and their destabilizers");

  std::uint64_t table_max_m = 0;
  auto* table = app.add_subcommand("table", "H(n/m) for every m <= max-m and n <= m/2");
  table->add_option("--max-m", table_max_m, "Largest m")->required();

  std::vector<std::string> verify_suites;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> choices(suite_names().begin(), suite_names().end());
  choices.emplace_back("all");
  verify->add_option("--suite", verify_suites, "Suite name, repeatable, or 'all'")
      ->required()
      ->check(CLI::IsMember(choices));

  std::uint64_t stats_min_m = 2;
  std::uint64_t stats_max_m = 0;
  auto* stats = app.add_subcommand("stats", "Minimum, average and sum of H over each m");
  stats->add_option("--min-m", stats_min_m, "Smallest m");
  stats->add_option("--max-m", stats_max_m, "Largest m")->required();

  std::string gsum_m;
  std::string gsum_r;
  auto* gsum = app.add_subcommand("gsum", "G(m, r), or G(m) and G'(m)");
  gsum->add_option("m", gsum_m)->required();
  gsum->add_option("r", gsum_r);

  std::size_t pell_count = 3;
  auto* pell = app.add_subcommand("pell", "Certificates for the Pell family of stable bundles");
  pell->add_option("--count", pell_count, "Number of Pell solutions");

  std::vector<std::string> twist_objects;
  auto* twist = app.add_subcommand(
      "twist", "Apply spherical twists left to right: START CENTER1 CENTER2 ...");
  twist->add_option("objects", twist_objects, "Divisors like 2e-2s or vectors like (1,s-e,-1)")
      ->required();

  std::string cf_text;
  auto* cf = app.add_subcommand("cf", "Value and H of a continued fraction [a1,a2,...]");
  cf->add_option("terms", cf_text)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  if (opt.jobs == 0) opt.jobs = std::max(1u, std::thread::hardware_concurrency());

  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      err << "error: cannot open '" << opt.out_path << "' for writing\n";
      return kUsageError;
    }
  }
  std::ostream& sink = opt.out_path.empty() ? out : file;

  try {
    if (*count) return cmd_count(count_fraction, count_walls, opt, sink);
    if (*table) return cmd_table(table_max_m, opt, sink);
    if (*verify) {
      if (std::find(verify_suites.begin(), verify_suites.end(), "all") != verify_suites.end()) {
        verify_suites.assign(suite_names().begin(), suite_names().end());
      }
      return cmd_verify(verify_suites, opt, sink);
    }
    if (*stats) return cmd_stats(stats_min_m, stats_max_m, opt, sink);
    if (*gsum) return cmd_gsum(gsum_m, gsum_r, opt, sink);
    if (*pell) return cmd_pell(pell_count, opt, sink);
    if (*twist) return cmd_twist(twist_objects, opt, sink);
    if (*cf) return cmd_cf(cf_text, opt, sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace k3::cli
