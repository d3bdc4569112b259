// pnb: command-line front end for bundles on P^n with a two-term resolution.
//
//   pnb enumerate --n 3 --rank 4 --degree 9
//   pnb enumerate --n 3 --rank 4 --max-reg 2 [--c1 5]
//   pnb hilbert   --n 3 --seq 5,4 [--anchor -1] [--at 0,1,2]
//   pnb lattice   --n 3 --seq 5,4 --anchor -1 --max-reg 2 --format dot
//   pnb present   --n 3 --a 2 --b 0,0,0,1,1 --mode explicit|random
//   pnb check     matrix.json [more.json ...]   ("-" reads standard input)
//   pnb deform    --n 3 --small 2:0,0,0,1,1 --big 2,2:0,0,0,1,1,2 --samples 10
//   pnb admissible --n 3 --a 1 --b 0,0,0,1
//
// Exit status: 0 on success, 1 on domain errors (a JSON object on stderr),
// 2 on usage errors.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pnb/pnb.hpp"

namespace {

using nlohmann::json;
using namespace pnb;

struct Globals {
  std::string format = "json";
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

std::uint32_t prime_from_env() {
  if (const char* env = std::getenv("PNB_PRIME")) {
    const long v = detail::parse_long(env, "PNB_PRIME");
    if (v < 2 || v >= (1L << 31) || !is_prime(static_cast<std::uint64_t>(v)))
      throw Error(ErrorCode::InvalidArgument, "PNB_PRIME must be a prime below 2^31");
    return static_cast<std::uint32_t>(v);
  }
  return kDefaultPrime;
}

// Runs f over items with at most `jobs` concurrent tasks; results keep input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned jobs, F f) {
  using R = decltype(f(items.front()));
  std::vector<R> out;
  out.reserve(items.size());
  if (jobs <= 1) {
    for (const auto& x : items) out.push_back(f(x));
    return out;
  }
  for (std::size_t start = 0; start < items.size(); start += jobs) {
    std::vector<std::future<R>> batch;
    for (std::size_t k = start; k < std::min(items.size(), start + jobs); ++k)
      batch.push_back(std::async(std::launch::async, f, std::cref(items[k])));
    for (auto& fut : batch) out.push_back(fut.get());
  }
  return out;
}

// Numbers that fit in 64 bits are emitted as JSON integers, larger ones as strings.
json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string csv_line(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (g.format == f) return;
  throw Error(ErrorCode::UnknownFormat, "format '" + g.format + "' is not available for this command");
}

BettiPair parse_pair_arg(int n, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "expected A:B, got '" + text + "'");
  return {n, parse_seq(text.substr(0, colon)), parse_seq(text.substr(colon + 1))};
}

HilbertFn hilbert_arg(int n, const std::string& seq, const std::optional<long>& anchor) {
  BundleSeq bs(n, parse_caret_list(seq));
  if (anchor) return {*anchor, std::move(bs)};
  return normalize(HilbertFn(0, std::move(bs))).h;
}

// --- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  long rank = 0;
  std::optional<long> degree, max_reg, c1;
};

void run_enumerate(const EnumerateArgs& args, const Globals& g, std::ostream& out) {
  require_format(g, {"json", "csv", "text"});
  if (args.c1) {
    if (!args.max_reg) throw Error(ErrorCode::InvalidArgument, "--c1 needs --max-reg");
    const auto pairs = enumerate_admissible(args.n, args.rank, *args.c1, *args.max_reg);
    if (g.format == "json") {
      json arr = json::array();
      for (const auto& p : pairs) arr.push_back(to_json(p));
      out << arr.dump() << "\n";
    } else if (g.format == "csv") {
      for (const auto& p : pairs) out << '"' << to_comma_list(p.a()) << "\",\"" << to_comma_list(p.b()) << "\"\n";
    } else {
      for (const auto& p : pairs) out << "a=" << p.a() << " b=" << p.b() << "\n";
    }
    return;
  }
  if (args.degree) {
    const auto seqs = bundle_sequences(args.n, args.rank, *args.degree);
    if (g.format == "json") {
      json arr = json::array();
      for (const auto& s : seqs) arr.push_back(s.values());
      out << arr.dump() << "\n";
    } else {
      for (const auto& s : seqs) out << (g.format == "csv" ? csv_line(s.values()) : to_caret_string(s)) << "\n";
    }
    return;
  }
  if (!args.max_reg) throw Error(ErrorCode::InvalidArgument, "enumerate needs --degree or --max-reg");
  // One task per degree; each task filters by regularity.
  std::vector<long> degrees;
  for (long D = args.rank; D <= args.rank * (*args.max_reg + 2); ++D) degrees.push_back(D);
  const long d = *args.max_reg;
  auto per_degree = parallel_map(degrees, g.jobs, [&](long D) {
    std::vector<HilbertFn> found;
    for (auto& s : bundle_sequences(args.n, args.rank, D)) {
      HilbertFn h = normalize(HilbertFn(0, std::move(s))).h;
      if (regularity(minimal_betti(h)) <= d) found.push_back(std::move(h));
    }
    return found;
  });
  std::vector<HilbertFn> all;
  for (auto& v : per_degree) std::move(v.begin(), v.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end());
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& h : all) arr.push_back(to_json(h));
    out << arr.dump() << "\n";
  } else if (g.format == "csv") {
    for (const auto& h : all) out << h.s0() << "," << csv_line(h.values()) << "\n";
  } else {
    for (const auto& h : all) out << "s0=" << h.s0() << " B=" << h.seq() << "\n";
  }
}

// --- hilbert ---------------------------------------------------------------

struct HilbertArgs {
  int n = 0;
  std::string seq, a, b, delta;
  std::optional<long> anchor;
  long start = 0;
  std::string at;
  bool displayed_criterion = false;
};

void run_hilbert(const HilbertArgs& args, const Globals& g, std::ostream& out) {
  require_format(g, {"json", "text"});
  if (!args.delta.empty()) {
    DeltaProfile prof{args.n, args.start, parse_caret_list(args.delta)};
    const bool valid = is_valid_hilbert(prof);
    json payload = {{"valid", valid}};
    if (valid) payload["hilbert"] = to_json(hilbert_from_profile(prof));
    if (g.format == "json")
      out << payload.dump() << "\n";
    else
      out << (valid ? "valid" : "invalid") << "\n";
    return;
  }

  std::optional<HilbertFn> h;
  if (!args.seq.empty()) {
    h = hilbert_arg(args.n, args.seq, args.anchor);
  } else {
    h = hilbert_of_betti(BettiPair(args.n, parse_seq(args.a), parse_seq(args.b)));
  }
  const BettiPair minimal = minimal_betti(*h);
  const Normalized norm = normalize(*h);
  json values = json::object();
  for (long t : parse_caret_list(args.at)) values[std::to_string(t)] = big_to_json(eval_H(*h, t));

  if (g.format == "json") {
    json payload = to_json(*h);
    payload["rank"] = h->rank();
    payload["degree"] = h->seq().degree();
    payload["c1"] = c1(*h);
    payload["minimal"] = to_json(minimal);
    payload["regularity"] = regularity(minimal);
    payload["normalized"] = {{"s0", norm.h.s0()}, {"twist", norm.twist}};
    payload["values"] = values;
    const auto conv = args.displayed_criterion ? SemistabilityConvention::AsDisplayed : SemistabilityConvention::SignCorrected;
    const SlopeReport slope = slope_and_rank_n_semistability(minimal, conv);
    payload["slope"] = std::to_string(slope.slope.numerator()) + "/" + std::to_string(slope.slope.denominator());
    payload["semistable"] = slope.semistable ? json(*slope.semistable) : json(nullptr);
    if (minimal.a().empty()) {
      payload["split_bound"] = nullptr;
    } else {
      const SplitBound sb = split_bound(minimal);
      payload["split_bound"] = {{"low", sb.low}, {"high", sb.high}};
    }
    out << payload.dump() << "\n";
  } else {
    out << "n=" << h->n() << " s0=" << h->s0() << " B=" << h->seq() << " rank=" << h->rank() << " c1=" << c1(*h) << "\n";
    out << "minimal a=" << minimal.a() << " b=" << minimal.b() << " reg=" << regularity(minimal) << "\n";
    out << "normalized s0=" << norm.h.s0() << " twist=" << norm.twist << "\n";
    for (auto it = values.begin(); it != values.end(); ++it) out << "H(" << it.key() << ")=" << it.value().dump() << "\n";
  }
}

// --- lattice ---------------------------------------------------------------

struct LatticeArgs {
  int n = 0;
  std::string seq;
  std::optional<long> anchor;
  long max_reg = 0;
};

void run_lattice(const LatticeArgs& args, const Globals& g, std::ostream& out) {
  const BettiLattice lat = BettiLattice::build(hilbert_arg(args.n, args.seq, args.anchor), args.max_reg);
  if (g.format == "text") {
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto& c = lat.nodes()[i];
      const auto p = lat.pair_of(c);
      out << "n" << i << " c=" << c << " a=" << p.a() << " b=" << p.b() << " q=" << c.size() << "\n";
    }
    for (const auto& e : lat.hasse()) out << "n" << e.from << " -> n" << e.to << "\n";
    return;
  }
  out << export_lattice(lat, g.format);
}

// --- present / check / deform / admissible --------------------------------

struct PresentArgs {
  int n = 0;
  std::string a, b, mode = "explicit";
};

void run_present(const PresentArgs& args, const Globals& g, std::ostream& out) {
  require_format(g, {"json", "text"});
  const BettiPair pair(args.n, parse_seq(args.a), parse_seq(args.b));
  PresMatrix m = args.mode == "random" ? random_matrix(pair, g.prime, g.seed) : explicit_matrix(pair, g.prime);
  if (g.format == "json") {
    out << to_json(m).dump() << "\n";
  } else {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " | " : "") << to_string(m(i, j));
      out << "\n";
    }
  }
}

json check_one(const PresMatrix& m) {
  const bool bundle = verify_bundle(m);
  json res = {{"bundle", bundle}, {"pair", to_json(m.pair())}, {"minimal_map", m.is_minimal()}};
  if (bundle) {
    const auto minimized = minimize_presentation(m);
    res["minimal_pair"] = to_json(minimized.pair);
  } else {
    res["minimal_pair"] = nullptr;
  }
  return res;
}

void run_check(const std::vector<std::string>& files, const Globals& g, std::ostream& out) {
  require_format(g, {"json", "text"});
  std::vector<PresMatrix> mats;
  for (const auto& f : files) {
    json j;
    try {
      if (f == "-") {
        j = json::parse(std::cin);
      } else {
        std::ifstream in(f);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + f + "'");
        j = json::parse(in);
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("invalid JSON in '") + f + "': " + e.what());
    }
    mats.push_back(matrix_from_json(j));
  }
  const auto results = parallel_map(mats, g.jobs, [](const PresMatrix& m) { return check_one(m); });
  if (g.format == "json") {
    out << (results.size() == 1 ? results.front() : json(results)).dump() << "\n";
  } else {
    for (const auto& r : results) out << (r["bundle"].get<bool>() ? "bundle" : "not a bundle") << "\n";
  }
}

struct DeformArgs {
  int n = 0;
  std::string small, big;
  int samples = 10;
};

void run_deform(const DeformArgs& args, const Globals& g, std::ostream& out) {
  require_format(g, {"json", "text"});
  const BettiPair small = parse_pair_arg(args.n, args.small);
  const BettiPair big = parse_pair_arg(args.n, args.big);
  const DeformationFamily fam = deform_family(small, big, g.prime, g.seed);
  const auto witness = *generalizes(small, big);

  std::vector<std::uint64_t> ts{0};
  std::mt19937_64 rng(derive_seed(g.seed, 2));
  for (int k = 0; k < args.samples; ++k) ts.push_back(1 + rng() % (g.prime - 1));

  const auto results = parallel_map(ts, g.jobs, [&](std::uint64_t t) {
    const PresMatrix m = fam.at(t);
    json s = {{"t", t}, {"bundle", verify_bundle(m)}};
    if (s["bundle"].get<bool>()) {
      const auto minimized = minimize_presentation(m);
      s["pair"] = to_json(minimized.pair);
      s["generalizes"] = generalizes(small, minimized.pair).has_value();
      s["equals_small"] = minimized.pair == small;
    }
    return s;
  });
  json payload = {{"small", to_json(small)}, {"big", to_json(big)}, {"witness", witness.vec()},
                  {"samples", results}};
  if (g.format == "json") {
    out << payload.dump() << "\n";
  } else {
    for (const auto& s : results) {
      out << "t=" << s["t"] << " ";
      if (s["bundle"].get<bool>())
        out << "a=" << betti_from_json(s["pair"]).a() << " b=" << betti_from_json(s["pair"]).b() << "\n";
      else
        out << "not a bundle\n";
    }
  }
}

struct AdmissibleArgs {
  int n = 0;
  std::string a, b;
};

void run_admissible(const AdmissibleArgs& args, const Globals& g, std::ostream& out) {
  require_format(g, {"json", "text"});
  const bool ok = is_admissible(BettiPair(args.n, parse_seq(args.a), parse_seq(args.b)));
  out << (ok ? "true" : "false") << "\n";
}

int emit_error(const std::string& code, const std::string& detail) {
  std::cerr << json{{"error", code}, {"detail", detail}}.dump() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  try {
    g.prime = prime_from_env();
  } catch (const Error& e) {
    return emit_error(std::string(to_string(e.code())), e.detail());
  }

  CLI::App app{"Bundles on P^n with vanishing intermediate cohomology"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--prime", g.prime, "Coefficient field F_p (default 32003 or $PNB_PRIME)");
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--jobs", g.jobs, "Worker threads for batch work")->check(CLI::Range(1u, 256u));

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Bundle sequences by degree or regularity; Betti pairs with --c1");
  enumerate->add_option("--n", en.n)->required();
  enumerate->add_option("--rank", en.rank)->required();
  auto* deg_opt = enumerate->add_option("--degree", en.degree);
  auto* reg_opt = enumerate->add_option("--max-reg", en.max_reg);
  deg_opt->excludes(reg_opt);
  enumerate->add_option("--c1", en.c1)->excludes(deg_opt);

  HilbertArgs hi;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function data of a bundle sequence or Betti pair");
  hilbert->add_option("--n", hi.n)->required();
  auto* seq_opt = hilbert->add_option("--seq", hi.seq, "Bundle sequence, e.g. 1^5,4");
  hilbert->add_option("--anchor", hi.anchor, "s0; default is the normalized anchor");
  auto* a_opt = hilbert->add_option("--a", hi.a);
  auto* b_opt = hilbert->add_option("--b", hi.b);
  auto* delta_opt = hilbert->add_option("--delta", hi.delta, "Values of the n-th difference to validate");
  hilbert->add_option("--start", hi.start, "Position of the first --delta value");
  hilbert->add_option("--at", hi.at, "Comma list of t at which to evaluate H");
  hilbert->add_flag("--displayed-criterion", hi.displayed_criterion, "Rank-n semistability via b_1 >= mu instead of b_1 >= -mu");
  seq_opt->excludes(a_opt)->excludes(b_opt)->excludes(delta_opt);
  a_opt->needs(b_opt);
  b_opt->needs(a_opt);

  LatticeArgs la;
  auto* lattice = app.add_subcommand("lattice", "Graded lattice of Betti pairs up to a regularity bound");
  lattice->add_option("--n", la.n)->required();
  lattice->add_option("--seq", la.seq)->required();
  lattice->add_option("--anchor", la.anchor);
  lattice->add_option("--max-reg", la.max_reg)->required();

  PresentArgs pr;
  auto* present = app.add_subcommand("present", "Presentation matrix for an admissible pair");
  present->add_option("--n", pr.n)->required();
  present->add_option("--a", pr.a)->required();
  present->add_option("--b", pr.b)->required();
  present->add_option("--mode", pr.mode)->check(CLI::IsMember({"explicit", "random"}));

  std::vector<std::string> check_files;
  auto* check = app.add_subcommand("check", "Decide whether matrices present bundles");
  check->add_option("matrix", check_files, "Matrix JSON files, or - for standard input")->required();

  DeformArgs de;
  auto* deform = app.add_subcommand("deform", "Sample the family psi + t (phi + identity)");
  deform->add_option("--n", de.n)->required();
  deform->add_option("--small", de.small, "Smaller pair as A:B")->required();
  deform->add_option("--big", de.big, "Larger pair as A:B")->required();
  deform->add_option("--samples", de.samples)->check(CLI::Range(0, 100000));

  AdmissibleArgs ad;
  auto* admissible = app.add_subcommand("admissible", "Test whether a pair of Betti numbers is realizable");
  admissible->add_option("--n", ad.n)->required();
  admissible->add_option("--a", ad.a)->required();
  admissible->add_option("--b", ad.b)->required();

  for (auto* sub : {enumerate, hilbert, lattice, present, check, deform, admissible}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::ostringstream out;
    if (*enumerate) run_enumerate(en, g, out);
    if (*hilbert) {
      if (hi.seq.empty() && hi.a.empty() && hi.delta.empty())
        throw Error(ErrorCode::InvalidArgument, "hilbert needs --seq, --a/--b or --delta");
      run_hilbert(hi, g, out);
    }
    if (*lattice) run_lattice(la, g, out);
    if (*present) run_present(pr, g, out);
    if (*check) run_check(check_files, g, out);
    if (*deform) run_deform(de, g, out);
    if (*admissible) run_admissible(ad, g, out);
    std::cout << out.str();
  } catch (const Error& e) {
    return emit_error(std::string(to_string(e.code())), e.detail());
  } catch (const nlohmann::json::exception& e) {
    return emit_error("ParseError", e.what());
  }
  return 0;
}
