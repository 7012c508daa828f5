// detrs command-line frontend. Exit codes: 0 ok, 1 malformed input or other
// error, 2 infeasible parameters.
#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "detrs/interpolate.hpp"
#include "detrs/render.hpp"
#include "detrs/rs_model.hpp"
#include "detrs/selftest.hpp"

using namespace detrs;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_encode(const std::string& field, int k, const std::string& points, int n, const std::string& message) {
  FieldPtr f = parse_field(field);
  std::vector<Fe> xs;
  if (!points.empty()) {
    for (const std::string& s : split_on(points, ',')) xs.push_back(parse_fe(*f, s));
  } else {
    if (n <= 0) fail(ErrorKind::ParseError, "encode needs --points or --n");
    xs = first_points(*f, static_cast<std::size_t>(n));
  }
  RSCode code = make_code(f, xs, k);
  UniPoly msg = parse_unipoly(f, message);
  std::vector<Fe> cw = rs_encode(code, msg);
  Instance inst{f, k, {}, {"codeword message=" + format_unipoly(msg)}};
  for (std::size_t j = 0; j < xs.size(); ++j) inst.points.push_back({xs[j], cw[j]});
  std::cout << format_instance(inst);
  return 0;
}

int cmd_corrupt(const std::string& in, const std::string& edits, int errors, u64 seed) {
  Instance inst = parse_instance(slurp(in));
  std::vector<Fe> xs, cw;
  for (const Point& p : inst.points) {
    xs.push_back(p.x);
    cw.push_back(p.y);
  }
  RSCode code = make_code(inst.field, xs, inst.k);
  std::map<std::size_t, Fe> e;
  if (!edits.empty()) {
    if (errors >= 0) fail(ErrorKind::ParseError, "--edits and --errors are exclusive");
    for (const std::string& item : split_on(edits, ',')) {
      std::size_t colon = item.find(':');
      if (colon == std::string::npos) fail(ErrorKind::ParseError, "edit '" + item + "' needs position:value");
      std::string pos = trim(std::string_view(item).substr(0, colon));
      std::size_t j = 0;
      auto [ptr, ec] = std::from_chars(pos.data(), pos.data() + pos.size(), j);
      if (pos.empty() || ec != std::errc() || ptr != pos.data() + pos.size())
        fail(ErrorKind::ParseError, "malformed edit position '" + pos + "'");
      if (e.count(j)) fail(ErrorKind::ParseError, "position " + pos + " edited twice");
      e[j] = parse_fe(*inst.field, std::string_view(item).substr(colon + 1));
    }
    inst.comments.push_back("edits " + edits);
  } else if (errors >= 0) {
    e = derive_edits(*inst.field, cw, static_cast<std::size_t>(errors), seed);
    inst.comments.push_back("seed=" + std::to_string(seed) + " errors=" + std::to_string(errors));
  }
  ReceivedWord w = corrupt(code, cw, e);
  inst.points = w.points();
  std::cout << format_instance(inst);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic Reed-Solomon list decoding"};
  app.require_subcommand(1);

  std::string field, points, message, in, edits, algo = "gs", preset;
  int k = 0, n = 0, errors = -1, t = 0;
  u64 seed = 0, bound = 1'000'000;
  bool json = false, trace = false, fallback = false;

  auto* enc = app.add_subcommand("encode", "Encode a message polynomial");
  enc->add_option("--field", field, "field, e.g. 'p=101' or 'p=2 r=3 mod=1,1,0,1'")->required();
  enc->add_option("--k", k, "code dimension")->required();
  enc->add_option("--points", points, "comma-separated evaluation points");
  enc->add_option("--n", n, "use the first n field elements as points");
  enc->add_option("--message", message, "coefficients low to high, comma-separated")->required();

  auto* cor = app.add_subcommand("corrupt", "Apply explicit or seeded edits to a codeword file");
  cor->add_option("--in", in, "codeword file")->required();
  cor->add_option("--edits", edits, "position:value pairs, comma-separated, 0-based positions");
  cor->add_option("--errors", errors, "number of seeded edits");
  cor->add_option("--seed", seed, "seed for --errors");

  auto* dec = app.add_subcommand("decode", "List-decode an instance file");
  dec->add_option("--algo", algo, "sudan, gs or brute")->check(CLI::IsMember({"sudan", "gs", "brute"}));
  dec->add_option("--in", in, "instance file")->required();
  auto* topt = dec->add_option("--t", t, "agreement threshold (gs, brute)");
  dec->add_flag("--json", json, "JSON output");
  dec->add_flag("--trace", trace, "emit the decoder trace");
  dec->add_flag("--fallback-brute", fallback, "cross-check gs against brute force");
  dec->add_option("--brute-bound", bound, "largest q^k brute force may enumerate");

  auto* par = app.add_subcommand("params", "Interpolation parameters for (n, k, t)");
  par->add_option("--n", n, "code length")->required();
  par->add_option("--k", k, "code dimension")->required();
  auto* ptopt = par->add_option("--t", t, "agreement threshold, default floor(sqrt((k-1)n))+1");
  par->add_flag("--json", json, "JSON output");

  auto* st = app.add_subcommand("selftest", "Run the tiny-field exhaustive checks");

  auto* ben = app.add_subcommand("bench", "Time the decoding stages on a preset");
  ben->add_option("--preset", preset, "p61-n32-k4 or p101-n64-k8")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*enc) return cmd_encode(field, k, points, n, message);
    if (*cor) return cmd_corrupt(in, edits, errors, seed);
    if (*dec) {
      DecodeRequest req;
      req.algo = parse_algo(algo);
      if (*topt) req.t = t;
      req.json = json;
      req.trace = trace;
      req.fallback_brute = fallback;
      req.brute_bound = bound;
      std::cout << render_decode(parse_instance(slurp(in)), req);
      return 0;
    }
    if (*par) {
      int tt = *ptopt ? t : johnson_threshold(n, k);
      std::cout << render_params(n, k, tt, json);
      return 0;
    }
    if (*st) {
      bool ok = true;
      for (const SelftestLine& l : run_selftest()) {
        std::cout << (l.pass ? "PASS " : "FAIL ") << l.suite << ": " << l.detail << "\n";
        ok = ok && l.pass;
      }
      return ok ? 0 : 1;
    }
    if (*ben) {
      std::cout << render_bench(make_preset(preset));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Infeasible ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
