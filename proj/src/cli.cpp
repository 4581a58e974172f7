#include "mfact/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <sstream>

#include "mfact/action.hpp"
#include "mfact/error.hpp"
#include "mfact/json_io.hpp"
#include "mfact/surjection.hpp"
#include "mfact/text_io.hpp"

namespace mfact::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int k = -1;
  std::string a;
  std::string b;
  bool a_given = false;
  std::string pair;
  std::string chain;
  std::string perm;
  int gen = 0;
  bool inverse = false;
  std::string format = "text";
  bool trace = false;
  std::uint64_t cap = default_enumeration_cap;
};

bool as_json(const Options& o) { return o.format == "json"; }

int require_n(const Options& o) {
  if (o.n < 1)
    throw UsageError("-n is required and must be >= 1");
  return o.n;
}

Chain read_chain(const Options& o) {
  if (o.chain.empty())
    throw UsageError("--chain is required");
  const auto first = o.chain.find_first_not_of(" \t");
  if (first != std::string::npos && o.chain[first] == '{') {
    json j;
    try {
      j = json::parse(o.chain);
    } catch (const json::exception& e) {
      throw Error(Errc::malformed, std::string("--chain: ") + e.what());
    }
    Chain c = chain_from_json(j);
    if (o.n > 0 && o.n != c.n())
      throw UsageError("-n disagrees with the n of --chain");
    return c;
  }
  return parse_chain(require_n(o), o.chain);
}

PairAB read_pair(const Options& o) {
  if (!o.pair.empty()) {
    if (o.a_given || !o.b.empty())
      throw UsageError("--pair cannot be combined with --a/--b");
    json j;
    try {
      j = json::parse(o.pair);
    } catch (const json::exception& e) {
      throw Error(Errc::malformed, std::string("--pair: ") + e.what());
    }
    PairAB p = pair_from_json(j);
    if (o.n > 0 && o.n != p.n)
      throw UsageError("-n disagrees with the n of --pair");
    return p;
  }
  if (o.b.empty())
    throw UsageError("--b is required (or --pair)");
  return PairAB(require_n(o), parse_int_list(o.a), parse_int_list(o.b));
}

void emit_chain(const Options& o, const Chain& c, std::ostream& out) {
  if (as_json(o))
    out << to_json(c).dump() << '\n';
  else
    out << format_chain(c) << '\n';
}

void emit_pair(const Options& o, const PairAB& p, std::ostream& out) {
  if (as_json(o))
    out << to_json(p).dump() << '\n';
  else
    out << "A=(" << format_int_list(p.a) << ") B={" << format_int_list(p.b) << "}\n";
}

int do_count(const Options& o, std::ostream& out) {
  if (o.k < 0)
    throw UsageError("-k is required and must be >= 0");
  const BigInt v = count_formula(require_n(o), o.k);
  if (as_json(o))
    out << json{{"n", o.n}, {"k", o.k}, {"count", to_json(v)}}.dump() << '\n';
  else
    out << v.str() << '\n';
  return exit_ok;
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (o.k < 0)
    throw UsageError("-k is required and must be >= 0");
  for (const auto& c : enumerate_sigma(require_n(o), o.k, o.cap))
    emit_chain(o, c, out);
  return exit_ok;
}

int do_verify(const Options& o, std::ostream& out) {
  const VerifyReport r = verify(require_n(o), o.cap);
  if (as_json(o)) {
    out << to_json(r).dump() << '\n';
  } else {
    out << "n = " << r.n << '\n';
    out << std::setw(3) << "k" << std::setw(14) << "formula" << std::setw(14) << "enumerated" << std::setw(12)
        << "surjective" << std::setw(8) << "fibres" << "  result\n";
    for (const auto& row : r.rows)
      out << std::setw(3) << row.k << std::setw(14) << row.formula.str() << std::setw(14) << row.enumerated
          << std::setw(12) << (row.surjective ? "yes" : "no") << std::setw(8) << (row.fibres_ok ? "ok" : "bad")
          << "  " << (row.pass() ? "PASS" : "FAIL") << '\n';
    out << (r.pass() ? "PASS" : "FAIL") << '\n';
  }
  return r.pass() ? exit_ok : exit_domain_error;
}

int do_validate(const Options& o, std::ostream& out) {
  const ValidityReport r = validate(read_chain(o));
  if (as_json(o)) {
    out << to_json(r).dump() << '\n';
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "geodesic: " << yn(r.is_geodesic) << '\n'
        << "below long cycle: " << yn(r.is_below) << '\n'
        << "member: " << yn(r.is_member) << '\n'
        << "non-decreasing: " << yn(r.is_nondecreasing) << '\n';
  }
  return exit_ok;
}

int do_map(const Options& o, std::ostream& out) {
  emit_chain(o, gamma(read_pair(o)), out);
  return exit_ok;
}

int do_section(const Options& o, std::ostream& out) {
  emit_pair(o, section(read_chain(o)), out);
  return exit_ok;
}

int do_fiber(const Options& o, std::ostream& out) {
  for (const auto& p : fiber(read_chain(o)))
    emit_pair(o, p, out);
  return exit_ok;
}

int do_park(const Options& o, std::ostream& out) {
  if (o.b.empty())
    throw UsageError("--b (open spaces) is required");
  const ParkingTrace t = park_traced(ParkingInput(require_n(o), parse_int_list(o.a), parse_int_list(o.b)));
  if (as_json(o)) {
    out << (o.trace ? to_json(t) : to_json(t.outcome)).dump() << '\n';
    return exit_ok;
  }
  if (o.trace) {
    for (const auto& car : t.cars)
      out << "car " << car.index << ": entry " << car.entry << ", probed " << format_int_list(car.probed, " ")
          << ", parked at " << car.space << '\n';
    out << "residue " << t.outcome.residue << '\n';
  } else {
    out << "spaces (" << format_int_list(t.outcome.spaces) << ") residue " << t.outcome.residue << '\n';
  }
  return exit_ok;
}

int do_act(const Options& o, std::ostream& out) {
  const Chain c = read_chain(o);
  const bool has_perm = !o.perm.empty();
  const bool has_gen = o.gen != 0;
  if (has_perm == has_gen)
    throw UsageError("act needs exactly one of --perm or --gen");
  if (o.inverse && !has_gen)
    throw UsageError("--inverse only applies to --gen");
  if (has_gen) {
    // --inverse forces the raw inverse braid move instead of the conditional generator.
    emit_chain(o, o.inverse ? braid_step(c, o.gen, true) : apply_generator(c, o.gen), out);
    return exit_ok;
  }
  emit_chain(o, apply_permutation(c, parse_permutation_any(std::max(c.length(), 1), o.perm)), out);
  return exit_ok;
}

int do_involute(const Options& o, std::ostream& out) {
  emit_chain(o, involute(read_chain(o)), out);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prefixes of minimal transposition factorizations of the n-cycle", "mfact"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_n = [&](CLI::App* sub) { sub->add_option("-n", o.n, "number of points")->check(CLI::PositiveNumber); };
  auto add_k = [&](CLI::App* sub) { sub->add_option("-k", o.k, "chain length")->required()->check(CLI::NonNegativeNumber); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_chain = [&](CLI::App* sub) {
    sub->add_option("--chain", o.chain, "chain as \"(3 8)(5 7)\" or JSON {\"n\":..,\"steps\":..}")->required();
  };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "resource cap on enumerated elements"); };

  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
  auto sub = [&](const char* name, const char* desc, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, desc);
    add_format(s);
    handlers[s] = fn;
    return s;
  };

  auto* count = sub("count", "closed-form number of prefixes of length k", do_count);
  add_n(count);
  add_k(count);

  auto* enumerate = sub("enumerate", "list every prefix of length k (JSON lines with --format json)", do_enumerate);
  add_n(enumerate);
  add_k(enumerate);
  add_cap(enumerate);

  auto* verify_cmd = sub("verify", "exhaustively check counts and fibres for every k < n", do_verify);
  add_n(verify_cmd);
  add_cap(verify_cmd);

  auto* validate_cmd = sub("validate", "check whether a chain is a prefix", do_validate);
  add_n(validate_cmd);
  add_chain(validate_cmd);

  auto* map_cmd = sub("map", "image of a pair (A, B) under the surjection", do_map);
  add_n(map_cmd);
  map_cmd->add_option("--a", o.a, "sequence A, comma separated");
  map_cmd->add_option("--b", o.b, "set B, comma separated");
  map_cmd->add_option("--pair", o.pair, "pair as JSON {\"n\":..,\"a\":..,\"b\":..}");

  auto* section_cmd = sub("section", "residue-1 preimage of a chain", do_section);
  add_n(section_cmd);
  add_chain(section_cmd);

  auto* fiber_cmd = sub("fiber", "all n preimages of a chain", do_fiber);
  add_n(fiber_cmd);
  add_chain(fiber_cmd);

  auto* park_cmd = sub("park", "run the circular parking process", do_park);
  add_n(park_cmd);
  park_cmd->add_option("--a", o.a, "entry points, comma separated");
  park_cmd->add_option("--b", o.b, "open spaces, comma separated");
  park_cmd->add_flag("--trace", o.trace, "print one line per car");

  auto* act_cmd = sub("act", "act on a chain by a generator or a permutation of its positions", do_act);
  add_n(act_cmd);
  add_chain(act_cmd);
  act_cmd->add_option("--perm", o.perm, "permutation of 1..k, cycle notation or one-line");
  act_cmd->add_option("--gen", o.gen, "generator index l in 1..k-1")->check(CLI::PositiveNumber);
  act_cmd->add_flag("--inverse", o.inverse, "apply the inverse braid move at --gen");

  auto* involute_cmd = sub("involute", "mirror a chain", do_involute);
  add_n(involute_cmd);
  add_chain(involute_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage_error;
  }
  for (CLI::Option* opt : {map_cmd->get_option("--a"), park_cmd->get_option("--a")})
    o.a_given = o.a_given || opt->count() > 0;

  CLI::App* chosen = app.get_subcommands().front();
  try {
    return handlers.at(chosen)(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_error;
  }
}

}  // namespace mfact::cli
