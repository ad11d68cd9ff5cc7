// parklot: parking functions, Łukasiewicz paths and the maps between them.
//
// Exit codes: 0 ok, 1 domain-negative (not a parking function, failed
// precondition, failed verification), 2 malformed input, 3 enumeration cap.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parklot/io.hpp"
#include "parklot/parklot.hpp"

namespace {

using namespace parklot;
using io::json;

enum Exit { ok = 0, negative = 1, malformed = 2, over_cap = 3 };

struct Config {
  std::string output = "auto";
  std::uint64_t cap = default_cap;
};

std::string read_input(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

std::string output_mode(const Config& cfg, const std::string& fallback) {
  return cfg.output == "auto" ? fallback : cfg.output;
}

json classification_json(const Classification& c) {
  return {{"is_pf", c.is_pf},
          {"is_non_decreasing", c.is_non_decreasing},
          {"is_prime", c.is_prime},
          {"is_unit_interval", c.is_unit_interval},
          {"is_motzkin", c.is_motzkin}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// park

int cmd_park(const Config& cfg, const std::string& input) {
  const auto parsed = io::parse_object(read_input(input), io::Kind::pf);
  const auto* pp = std::get_if<ParkingPreference>(&parsed);
  if (!pp) throw input_error("park expects a parking preference");
  const ParkingPreference& p = *pp;
  const ParkResult result = park(p);
  const ParkResult mvp = mvp_park(p);
  const auto mode = output_mode(cfg, "text");

  if (mode == "json") {
    json j = io::to_json(p);
    j["parking_function"] = result.parked();
    j["classification"] = classification_json(classify(p));
    if (result) {
      const auto d = displacement(p);
      j["outcome"] = result.outcome().vector();
      j["displacement"] = d.vector();
      j["total_displacement"] = d.total();
      j["max_displacement"] = d.max();
      j["breakpoints"] = breakpoints(p);
      j["word"] = psi_pf_to_luk(p).vector();
    } else {
      j["failed_car"] = result.failure().car;
      j["occupancy"] = result.failure().occupancy;
    }
    if (mvp) j["mvp_outcome"] = mvp.outcome().vector();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "prefs: " << to_string(p) << '\n';
    if (!result) {
      std::cout << "car " << result.failure().car << " fails\n"
                << "occupancy: " << join(result.failure().occupancy) << '\n'
                << "parking function: no\n";
      return negative;
    }
    const auto d = displacement(p);
    const auto c = classify(p);
    std::cout << "outcome: " << join(result.outcome().vector()) << '\n'
              << "displacement: " << join(d.vector()) << '\n'
              << "total displacement: " << d.total() << '\n'
              << "max displacement: " << d.max() << '\n'
              << "breakpoints: " << join(breakpoints(p)) << '\n'
              << "word: " << to_string(psi_pf_to_luk(p)) << '\n'
              << "mvp outcome: " << (mvp ? join(mvp.outcome().vector()) : std::string("-")) << '\n'
              << "parking function: yes\n"
              << "non-decreasing: " << yes_no(c.is_non_decreasing) << '\n'
              << "prime: " << yes_no(c.is_prime) << '\n'
              << "unit-interval: " << yes_no(c.is_unit_interval) << '\n'
              << "motzkin: " << yes_no(c.is_motzkin) << '\n';
  }
  return result ? ok : negative;
}

// ---------------------------------------------------------------------------
// convert

io::Parsed convert(const io::Parsed& source, io::Kind target) {
  using io::Kind;
  if (io::kind_of(source) == target) return source;

  // Everything routes through a word and, where needed, a preference.
  auto as_pf = [&]() -> ParkingPreference {
    return std::visit(
        [](const auto& o) -> ParkingPreference {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, ParkingPreference>) return o;
          else if constexpr (std::is_same_v<T, LukasiewiczWord>) return psi_luk_to_pf(o);
          else if constexpr (std::is_same_v<T, LabelledLukasiewiczWord>) return decode_labelled(o);
          else if constexpr (std::is_same_v<T, DyckPath>) return dyck_to_pf(o);
          else return psi_luk_to_pf(tree_to_word(o));
        },
        source);
  };
  auto as_word = [&]() -> LukasiewiczWord {
    return std::visit(
        [](const auto& o) -> LukasiewiczWord {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, ParkingPreference>) return psi_pf_to_luk(o);
          else if constexpr (std::is_same_v<T, LukasiewiczWord>) return o;
          else if constexpr (std::is_same_v<T, LabelledLukasiewiczWord>) return o.word();
          else if constexpr (std::is_same_v<T, DyckPath>) return psi_pf_to_luk(dyck_to_pf(o));
          else return tree_to_word(o);
        },
        source);
  };
  switch (target) {
  case Kind::pf: return as_pf();
  case Kind::luk: return as_word();
  case Kind::labelled_luk: return encode_labelled(as_pf());
  case Kind::dyck: return pf_to_dyck(as_pf());
  case Kind::tree: return word_to_tree(as_word());
  }
  throw input_error("unsupported conversion");
}

int cmd_convert(const Config& cfg, const std::string& input, const std::string& to, const std::string& from,
                const std::string& style) {
  std::optional<io::Kind> hint;
  if (!from.empty()) hint = io::parse_kind(from);
  const auto source = io::parse_object(read_input(input), hint);
  const auto result = convert(source, io::parse_kind(to));
  const auto mode = output_mode(cfg, "text");
  if (mode == "json") {
    std::cout << io::to_json(result).dump() << '\n';
  } else if (const auto* d = std::get_if<DyckPath>(&result); d && style == "UD") {
    std::cout << d->to_string(DyckStyle::UD) << '\n';
  } else {
    std::cout << io::to_text(result) << '\n';
  }
  return ok;
}

// ---------------------------------------------------------------------------
// enumerate / count / hist

struct SpecFlags {
  std::string family;
  int n = 1;
  std::string strategy = "recursive";
  std::optional<int> max_height;
  std::optional<int> max_step;
  std::optional<long long> min_area;
  std::optional<long long> max_area;

  FamilySpec spec() const {
    FamilySpec s{parse_family(family), n, {}};
    s.filter.max_height = max_height;
    s.filter.max_step = max_step;
    s.filter.min_area = min_area;
    s.filter.max_area = max_area;
    return s;
  }
  Strategy strat() const {
    if (strategy == "recursive") return Strategy::recursive;
    if (strategy == "filter") return Strategy::ambient_filter;
    throw input_error("unknown strategy '" + strategy + "'");
  }
};

void add_spec_flags(CLI::App* sub, SpecFlags& f) {
  sub->add_option("--family", f.family, "pf, pf_inc, prime_pf, prime_pf_inc, upf, upf_inc, motzkin_pf, "
                                        "motzkin_pf_inc, luk, prime_luk, dyck, motz, motz_le1, plane_tree")
      ->required();
  sub->add_option("--n", f.n, "size (word length, cars, semilength, tree edges)")->required();
  sub->add_option("--strategy", f.strategy, "recursive or filter")->check(CLI::IsMember({"recursive", "filter"}));
  sub->add_option("--max-height", f.max_height, "keep objects whose word has height <= value");
  sub->add_option("--max-step", f.max_step, "keep objects whose word has steps <= value");
  sub->add_option("--min-area", f.min_area);
  sub->add_option("--max-area", f.max_area);
}

std::string csv_of(const Object& o) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DyckPath>) return v.to_string(DyckStyle::EN);
        else if constexpr (std::is_same_v<T, PlaneTree>) return to_string(tree_to_word(v));
        else return join(v.vector());
      },
      o);
}

io::Parsed to_parsed(const Object& o) {
  return std::visit([](const auto& v) -> io::Parsed { return v; }, o);
}

int cmd_enumerate(const Config& cfg, const SpecFlags& flags) {
  const auto mode = output_mode(cfg, "json");
  generate(
      flags.spec(),
      [&](const Object& o) {
        if (mode == "json") std::cout << io::to_json(to_parsed(o)).dump() << '\n';
        else if (mode == "csv") std::cout << '"' << csv_of(o) << "\"\n";
        else std::cout << io::to_text(to_parsed(o)) << '\n';
      },
      flags.strat(), cfg.cap);
  return ok;
}

int cmd_count(const Config& cfg, const SpecFlags& flags) {
  const auto spec = flags.spec();
  const BigInt total = count(spec, flags.strat(), cfg.cap);
  const auto mode = output_mode(cfg, "text");
  std::optional<BigInt> formula;
  if (spec.filter.empty()) formula = formula_count(spec.family, spec.n);
  if (mode == "json") {
    json j{{"family", family_name(spec.family)}, {"n", spec.n}, {"count", total.convert_to<std::uint64_t>()}};
    if (formula) {
      if (*formula <= std::numeric_limits<std::uint64_t>::max()) j["formula"] = formula->convert_to<std::uint64_t>();
      else j["formula"] = formula->str();
    }
    std::cout << j.dump() << '\n';
  } else if (mode == "csv") {
    std::cout << "family,n,count\n" << family_name(spec.family) << ',' << spec.n << ',' << total << '\n';
  } else {
    std::cout << total << '\n';
  }
  return ok;
}

int cmd_hist(const Config& cfg, const SpecFlags& flags, const std::string& stat_list) {
  std::vector<Stat> stats;
  std::stringstream ss(stat_list);
  for (std::string item; std::getline(ss, item, ',');) stats.push_back(parse_stat(io::trim(item)));
  const auto spec = flags.spec();
  const auto hist = joint_distribution(spec, stats, flags.strat(), cfg.cap);
  const auto mode = output_mode(cfg, "csv");
  std::vector<std::string> names;
  for (Stat s : stats) names.emplace_back(stat_name(s));
  if (mode == "json") {
    json rows = json::array();
    std::uint64_t total = 0;
    for (const auto& [key, n] : hist) {
      rows.push_back({{"key", key}, {"count", n}});
      total += n;
    }
    std::cout << json{{"family", family_name(spec.family)}, {"n", spec.n}, {"stats", names},
                      {"total", total}, {"histogram", rows}}.dump()
              << '\n';
  } else if (mode == "csv") {
    std::cout << join(names) << ",count\n";
    for (const auto& [key, n] : hist) std::cout << join(key) << ',' << n << '\n';
  } else {
    for (const auto& [key, n] : hist) {
      for (std::size_t i = 0; i < key.size(); ++i) std::cout << (i ? " " : "") << names[i] << '=' << key[i];
      std::cout << ": " << n << '\n';
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// render / verify

int cmd_render(const std::string& input, const std::string& format, int scale, bool annotate) {
  const auto parsed = io::parse_object(read_input(input), io::Kind::luk);
  LukasiewiczWord word;
  if (const auto* w = std::get_if<LukasiewiczWord>(&parsed)) word = *w;
  else if (const auto* lw = std::get_if<LabelledLukasiewiczWord>(&parsed)) word = lw->word();
  else throw input_error("render expects a Lukasiewicz word");
  RenderOptions options;
  options.format = format == "svg" ? RenderFormat::svg : RenderFormat::ascii;
  options.scale = scale;
  options.annotate_spots = annotate;
  std::cout << render(word, options);
  return ok;
}

int cmd_verify(const Config& cfg, int max_n, const std::vector<std::string>& only) {
  if (max_n < 1) throw input_error("--max-n must be at least 1");
  const auto known = property_names();
  for (const auto& name : only) {
    if (std::find(known.begin(), known.end(), name) == known.end()) throw input_error("unknown property '" + name + "'");
  }
  const auto results = run_verification(max_n, only);
  bool all = true;
  const auto mode = output_mode(cfg, "text");
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (mode == "json") {
      rows.push_back({{"property", r.name}, {"passed", r.passed}, {"max_n", r.checked_up_to},
                      {"cases", r.cases}, {"counterexample", r.counterexample}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (n<=" << r.checked_up_to << ", " << r.cases
                << " cases)";
      if (!r.passed) std::cout << ": " << r.counterexample;
      std::cout << '\n';
    }
  }
  if (mode == "json") std::cout << json{{"passed", all}, {"properties", rows}}.dump() << '\n';
  else std::cout << (all ? "all properties hold\n" : "some properties FAILED\n");
  return all ? ok : negative;
}

std::uint64_t cap_from_env() {
  const char* env = std::getenv("PARKLOT_CAP");
  if (!env) return default_cap;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw input_error(std::string("PARKLOT_CAP is not a number: '") + env + "'");
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parking functions, Lukasiewicz paths and the bijection between them"};
  app.require_subcommand(1, 1);
  Config cfg;
  std::optional<std::uint64_t> cap_flag;
  app.add_option("--output", cfg.output, "json, csv or text (default depends on the command)")
      ->check(CLI::IsMember({"auto", "json", "csv", "text"}));
  app.add_option("--cap", cap_flag, "largest number of objects an enumeration may visit (env PARKLOT_CAP)");

  std::string input;
  auto* park_cmd = app.add_subcommand("park", "run the parking process and classify the preference");
  park_cmd->add_option("input", input, "preference, e.g. 2,1,4,4,1 (or - for stdin)")->required();
  park_cmd->fallthrough();

  std::string to, from, style = "EN";
  auto* convert_cmd = app.add_subcommand("convert", "apply a bijection");
  convert_cmd->add_option("input", input, "object as integers, Dyck letters or JSON (or - for stdin)")->required();
  convert_cmd->add_option("--to", to, "pf, luk, dyck, tree or labelled")
      ->required()
      ->check(CLI::IsMember({"pf", "luk", "dyck", "tree", "labelled", "labelled_luk"}));
  convert_cmd->add_option("--from", from, "read a bare integer list as pf or luk")->check(CLI::IsMember({"pf", "luk"}));
  convert_cmd->add_option("--style", style, "Dyck letters for text output")->check(CLI::IsMember({"EN", "UD"}));
  convert_cmd->fallthrough();

  SpecFlags spec_flags;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every object of a family");
  add_spec_flags(enumerate_cmd, spec_flags);
  enumerate_cmd->fallthrough();
  auto* count_cmd = app.add_subcommand("count", "count a family exhaustively");
  add_spec_flags(count_cmd, spec_flags);
  count_cmd->fallthrough();
  std::string stats = "area";
  auto* hist_cmd = app.add_subcommand("hist", "joint distribution of statistics over a family");
  add_spec_flags(hist_cmd, spec_flags);
  hist_cmd->add_option("--stat", stats, "comma list of area, height, total_disp, max_disp");
  hist_cmd->fallthrough();

  std::string format = "ascii";
  int scale = 20;
  bool annotate = false;
  auto* render_cmd = app.add_subcommand("render", "draw a Lukasiewicz path");
  render_cmd->add_option("input", input, "word, e.g. 2,-1,0,1,-1,-1,0,3,-1,-1,-1,0 (or - for stdin)")->required();
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--scale", scale, "svg pixels per unit")->check(CLI::PositiveNumber);
  render_cmd->add_flag("--annotate-spots", annotate, "mark each unit column with the step crossing it");
  render_cmd->fallthrough();

  int max_n = 6;
  std::vector<std::string> only;
  auto* verify_cmd = app.add_subcommand("verify", "run the exhaustive property suite");
  verify_cmd->add_option("--max-n", max_n, "largest size to check");
  verify_cmd->add_option("--property", only, "run only the named properties");
  verify_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : malformed;
  }

  try {
    cfg.cap = cap_flag ? *cap_flag : cap_from_env();
    if (*park_cmd) return cmd_park(cfg, input);
    if (*convert_cmd) return cmd_convert(cfg, input, to, from, style);
    if (*enumerate_cmd) return cmd_enumerate(cfg, spec_flags);
    if (*count_cmd) return cmd_count(cfg, spec_flags);
    if (*hist_cmd) return cmd_hist(cfg, spec_flags, stats);
    if (*render_cmd) return cmd_render(input, format, scale, annotate);
    if (*verify_cmd) return cmd_verify(cfg, max_n, only);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return over_cap;
  } catch (const parklot::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return negative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return malformed;
  }
  return malformed;
}
