#include "pytrip/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "pytrip/difference.hpp"
#include "pytrip/euclid.hpp"
#include "pytrip/legfactor.hpp"
#include "pytrip/primes.hpp"
#include "pytrip/twin.hpp"
#include "pytrip/verify.hpp"

namespace pytrip::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::array<u64, 3> parse_triple(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw std::invalid_argument("triple literal must be a,b,c: '" + text + "'");
  return {parse_positive(parts[0]), parse_positive(parts[1]), parse_positive(parts[2])};
}

std::vector<u64> parse_list(const std::string& text) {
  std::vector<u64> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_positive(part));
  return out;
}

const char* tag(const Triple& t) { return is_primitive(t) ? "PPT" : "PT"; }

void print_triple(std::ostream& out, const Triple& t) {
  const Triple c = canonicalize(t);
  out << c.a << ' ' << c.b << ' ' << c.c << ' ' << tag(c);
}

// Raw option values as typed; validated after CLI11 has matched the shape.
struct RawArgs {
  std::string triple, h, k, a, d, count, max, mode, parabolas, out, format, canvas;
};

int run_primes(const Command& cmd, std::ostream& out) {
  const u64 n = cmd.max;
  switch (cmd.mode) {
    case PrimeMode::leg:
      for (u64 p = 5; p <= n; p += 2) {
        if (!is_prime_u64(p)) continue;
        const PrimeLegReport r = prime_leg_ppt(p);
        print_triple(out, r.triple);
        out << " b_mod_12=" << r.triple.b % 12 << " c_mod_4=" << r.triple.c % 4 << '\n';
      }
      break;
    case PrimeMode::both:
      for (const Triple& t : prime_leg_and_hyp(n)) {
        print_triple(out, t);
        out << '\n';
      }
      break;
    case PrimeMode::ends13:
      for (u64 k = 1; checked::mul(5, 2 * k + 1) <= n; ++k) {
        const Ends13Result r = ends13_family(k);
        print_triple(out, r.triple);
        out << " c_mod_100=" << r.c_mod_100 << ' ' << (r.c_is_prime ? "prime" : "composite");
        if (r.excluded) out << " excluded:13|c";
        out << '\n';
      }
      break;
    case PrimeMode::ends1:
      for (u64 a = 9; a <= n; ++a) {
        if (a % 10 != 1 && a % 10 != 9) continue;
        const Ends1Result r = ends1_family(a);
        print_triple(out, r.triple);
        out << ' ' << (r.c_is_prime ? "prime" : "composite") << '\n';
      }
      break;
    case PrimeMode::ends5:
      for (u64 a = 7; a <= n; ++a) {
        if (a % 10 != 3 && a % 10 != 7) continue;
        const Ends5Record r = ends5_obstruction(a);
        print_triple(out, {r.a, r.c - 1, r.c});
        out << " c_mod_10=" << r.c % 10 << " composite\n";
      }
      break;
    case PrimeMode::count: {
      const u64 odd_n = n % 2 == 0 ? n - 1 : n;
      const OddPrimeCount r = odd_prime_count(odd_n);
      out << "n=" << r.n << " odd_primes=" << r.odd_primes << " odd_integers=" << r.odd_integers
          << " percent=" << std::fixed << std::setprecision(2) << r.percent() << '\n';
      out << "note: counting 2 as well gives " << r.all_primes() << " primes <= " << r.n << '\n';
      break;
    }
    case PrimeMode::sum2sq:
      for (u64 p = 5; p <= n; p += 4) {
        if (!is_prime_u64(p)) continue;
        const auto [x, y] = sum_two_squares(p);
        out << p << ' ' << x << ' ' << y << '\n';
      }
      break;
  }
  return kExitOk;
}

int run_oracle(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (!cmd.verify_generators) {
    for (const Triple& t : oracle_enumerate(cmd.max)) {
      print_triple(out, t);
      out << '\n';
    }
    return kExitOk;
  }
  const GeneratorCheck r = verify_generators(cmd.max);
  out << "oracle " << r.oracle.size() << '\n';
  out << "euclid " << r.euclid.size() << '\n';
  out << "difference " << r.difference.size() << '\n';
  out << "leg-factor " << r.leg_factor.size() << '\n';
  out << "union " << r.combined.size() << '\n';
  if (!r.all_sound() || !r.union_matches()) {
    err << "generator union does not match the oracle below " << cmd.max << '\n';
    return kExitRejected;
  }
  out << "verified\n";
  return kExitOk;
}

}  // namespace

u64 parse_positive(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : text)
    if (ch < '0' || ch > '9') throw std::invalid_argument("not a positive integer: '" + text + "'");
  u64 v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec == std::errc::result_out_of_range) throw std::invalid_argument("integer does not fit in 64 bits: " + text);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::invalid_argument("not a positive integer: '" + text + "'");
  if (v == 0) throw std::invalid_argument("integer must be positive");
  return v;
}

std::variant<Command, Usage> parse_args(std::span<const std::string> args) {
  CLI::App app{"Exact Pythagorean triple generation and analysis", "pytrip"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  RawArgs raw;
  bool odd_variant = false;
  bool ppt_only = false;
  bool verify = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a triple a,b,c");
  classify_cmd->add_option("--triple", raw.triple, "a,b,c")->required();

  auto* gen = app.add_subcommand("gen", "Generate a triple");
  gen->require_subcommand(1);
  auto* gen_euclid = gen->add_subcommand("euclid", "Euclid's formula from (h, k)");
  gen_euclid->add_option("--h", raw.h)->required();
  gen_euclid->add_option("--k", raw.k)->required();
  gen_euclid->add_flag("--odd-variant", odd_variant, "(hk, (h^2-k^2)/2, (h^2+k^2)/2) for odd h, k");
  auto* gen_d = gen->add_subcommand("d", "Triple (a, b, b + d)");
  gen_d->add_option("--a", raw.a)->required();
  gen_d->add_option("--d", raw.d)->required();

  auto* invert = app.add_subcommand("invert", "Recover (h, k) from a primitive triple");
  invert->add_option("--triple", raw.triple, "a,b,c")->required();

  auto* for_leg = app.add_subcommand("for-leg", "Every triple with leg a");
  for_leg->add_option("--a", raw.a)->required();

  auto* twins = app.add_subcommand("twins", "Triples (a, a + 1, c)");
  twins->add_option("--count", raw.count)->required();

  auto* allowable = app.add_subcommand("allowable-d", "Allowable differences c - b");
  allowable->add_option("--max", raw.max)->required();

  auto* primes = app.add_subcommand("primes", "Prime families");
  primes->add_option("--mode", raw.mode, "leg|both|ends13|ends1|ends5|count|sum2sq")->required();
  primes->add_option("--max", raw.max)->required();

  auto* plot = app.add_subcommand("plot", "Scatter of leg points as CSV or SVG");
  plot->add_option("--max", raw.max)->required();
  plot->add_flag("--ppt-only", ppt_only);
  plot->add_option("--parabolas", raw.parabolas, "d1,d2,...");
  plot->add_option("--out", raw.out)->required();
  plot->add_option("--format", raw.format, "csv|svg")->required();
  plot->add_option("--canvas", raw.canvas, "canvas size in px (default 1000)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration");
  oracle->add_option("--max", raw.max)->required();
  oracle->add_flag("--verify-generators", verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return Usage{kExitOk, app.help()};
  } catch (const CLI::ParseError& e) {
    // Nested subcommand help is reported through the same exception type.
    if (e.get_exit_code() == 0) return Usage{kExitOk, app.help("", CLI::AppFormatMode::All)};
    return Usage{kExitUsage, std::string{e.what()} + "\n" + app.help()};
  }

  Command cmd;
  try {
    if (classify_cmd->parsed()) {
      cmd.sub = Subcommand::classify;
      cmd.triple = parse_triple(raw.triple);
    } else if (gen_euclid->parsed()) {
      cmd.sub = Subcommand::gen_euclid;
      cmd.h = parse_positive(raw.h);
      cmd.k = parse_positive(raw.k);
      cmd.odd_variant = odd_variant;
    } else if (gen_d->parsed()) {
      cmd.sub = Subcommand::gen_diff;
      cmd.a = parse_positive(raw.a);
      cmd.d = parse_positive(raw.d);
    } else if (invert->parsed()) {
      cmd.sub = Subcommand::invert;
      cmd.triple = parse_triple(raw.triple);
    } else if (for_leg->parsed()) {
      cmd.sub = Subcommand::for_leg;
      cmd.a = parse_positive(raw.a);
    } else if (twins->parsed()) {
      cmd.sub = Subcommand::twins;
      cmd.count = parse_positive(raw.count);
    } else if (allowable->parsed()) {
      cmd.sub = Subcommand::allowable_d;
      cmd.max = parse_positive(raw.max);
    } else if (primes->parsed()) {
      cmd.sub = Subcommand::primes;
      cmd.max = parse_positive(raw.max);
      static const std::vector<std::pair<std::string, PrimeMode>> modes{
          {"leg", PrimeMode::leg},     {"both", PrimeMode::both},   {"ends13", PrimeMode::ends13},
          {"ends1", PrimeMode::ends1}, {"ends5", PrimeMode::ends5}, {"count", PrimeMode::count},
          {"sum2sq", PrimeMode::sum2sq}};
      bool found = false;
      for (const auto& [name, mode] : modes) {
        if (name == raw.mode) {
          cmd.mode = mode;
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("unknown prime mode '" + raw.mode + "'");
    } else if (plot->parsed()) {
      cmd.sub = Subcommand::plot;
      cmd.max = parse_positive(raw.max);
      cmd.ppt_only = ppt_only;
      if (!raw.parabolas.empty()) cmd.parabolas = parse_list(raw.parabolas);
      if (!raw.canvas.empty()) cmd.canvas_px = parse_positive(raw.canvas);
      cmd.out_path = raw.out;
      if (raw.format == "csv") {
        cmd.format = OutputFormat::csv;
      } else if (raw.format == "svg") {
        cmd.format = OutputFormat::svg;
      } else {
        throw std::invalid_argument("format must be csv or svg");
      }
    } else if (oracle->parsed()) {
      cmd.sub = Subcommand::oracle;
      cmd.max = parse_positive(raw.max);
      cmd.verify_generators = verify;
    } else {
      return Usage{kExitUsage, app.help()};
    }
  } catch (const std::invalid_argument& e) {
    return Usage{kExitUsage, std::string{e.what()} + "\n"};
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.sub) {
      case Subcommand::classify: {
        const auto& [x, y, z] = cmd.triple;
        const auto cls = classify(x, y, z);
        if (!cls) {
          err << "not a Pythagorean triple: " << x << ' ' << y << ' ' << z << '\n';
          return kExitRejected;
        }
        std::array<u64, 3> v = cmd.triple;
        std::sort(v.begin(), v.end());
        out << v[0] << ' ' << v[1] << ' ' << v[2] << ' ' << (cls->primitive ? "PPT" : "PT") << " gcd=" << cls->gcd
            << " d=" << cls->d << " d_prime=" << cls->d_prime << '\n';
        return kExitOk;
      }
      case Subcommand::gen_euclid: {
        const EuclidPair p{cmd.h, cmd.k};
        print_triple(out, cmd.odd_variant ? euclid_odd_variant(p) : euclid_triple(p));
        out << '\n';
        return kExitOk;
      }
      case Subcommand::gen_diff: {
        const auto t = triple_with_diff(cmd.a, cmd.d);
        if (!t) {
          err << "no integer triple (a, b, b + d) for a=" << cmd.a << " d=" << cmd.d << '\n';
          return kExitRejected;
        }
        print_triple(out, *t);
        out << '\n';
        return kExitOk;
      }
      case Subcommand::invert: {
        const auto& [x, y, z] = cmd.triple;
        const EuclidPair p = invert_euclid({x, y, z});
        out << p.h << ' ' << p.k << '\n';
        return kExitOk;
      }
      case Subcommand::for_leg:
        for (const LegTriple& lt : triples_for_leg(cmd.a)) {
          print_triple(out, lt.triple);
          out << " u=" << lt.split.u << " v=" << lt.split.v << " c-b=" << lt.c_minus_b() << " c-a=" << lt.c_minus_a()
              << '\n';
        }
        return kExitOk;
      case Subcommand::twins:
        for (const Triple& t : twin_sequence(cmd.count)) {
          print_triple(out, t);
          out << '\n';
        }
        return kExitOk;
      case Subcommand::allowable_d:
        for (u64 d : allowable_diffs(cmd.max)) out << d << '\n';
        return kExitOk;
      case Subcommand::primes:
        return run_primes(cmd, out);
      case Subcommand::plot: {
        PlotConfig cfg{cmd.max, cmd.ppt_only, cmd.parabolas, cmd.canvas_px, cmd.format};
        const auto points = scatter_points(cfg);
        const std::string doc = cmd.format == OutputFormat::csv ? emit_csv(points) : emit_svg(points, cfg);
        write_document(cmd.out_path, doc);
        out << "wrote " << points.size() << " points (" << points.size() / 2 << " triples) to " << cmd.out_path
            << '\n';
        return kExitOk;
      }
      case Subcommand::oracle:
        return run_oracle(cmd, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRejected;
  }
  return kExitRejected;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(args);
  if (auto* usage = std::get_if<Usage>(&parsed)) {
    (usage->exit_code == kExitOk ? out : err) << usage->text;
    return usage->exit_code;
  }
  return run(std::get<Command>(parsed), out, err);
}

}  // namespace pytrip::cli
