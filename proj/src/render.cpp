#include "detrs/render.hpp"

#include <chrono>
#include <cstdio>
#include <json.hpp>

#include "detrs/gs_decode.hpp"
#include "detrs/kernels.hpp"
#include "detrs/newton_sudan.hpp"
#include "detrs/reference_oracle.hpp"
#include "detrs/rs_model.hpp"

namespace detrs {

Algo parse_algo(std::string_view s) {
  if (s == "sudan") return Algo::Sudan;
  if (s == "gs") return Algo::Gs;
  if (s == "brute") return Algo::Brute;
  fail(ErrorKind::ParseError, "unknown algorithm '" + std::string(s) + "'");
}

namespace {

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::Sudan: return "sudan";
    case Algo::Gs: return "gs";
    case Algo::Brute: return "brute";
  }
  return "?";
}

std::string params_event(const DecodeParams& p) {
  return "params n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) + " t=" + std::to_string(p.t) +
         " m=" + std::to_string(p.m) + " D=" + std::to_string(p.D);
}

struct Decoded {
  int t = 0;
  std::vector<UniPoly> list;
  std::vector<std::string> trace;
};

Decoded decode_sudan(const ReceivedWord& w, int k) {
  SudanReport r = sudan_decode_report(w, k);
  Decoded d{r.params.t, r.list, {}};
  d.trace.push_back(params_event(r.params));
  if (r.shortcut) d.trace.push_back("shortcut");
  for (const SudanEvent& e : r.trace)
    d.trace.push_back("sudan level=" + std::to_string(e.level) + " point=" + std::to_string(e.point) +
                      " candidate=" + (e.candidate ? format_unipoly(*e.candidate) : std::string("none")) +
                      " accepted=" + (e.accepted ? "1" : "0"));
  return d;
}

Decoded decode_gs(const ReceivedWord& w, int k, std::optional<int> t) {
  GsReport r = gs_decode_report(w, k, t);
  Decoded d{r.params.t, r.list, {}};
  d.trace.push_back(params_event(r.params));
  if (r.below_threshold) {
    d.trace.push_back("below_threshold");
    return d;
  }
  d.trace.push_back("interpolation deg_x=" + std::to_string(r.q.deg_x()) + " deg_y=" + std::to_string(r.q.deg_y()));
  d.trace.push_back("content " + format_unipoly(r.content));
  if (r.useless) {
    d.trace.push_back("useless");
    return d;
  }
  int iter = 0;
  for (const RefineEvent& e : r.set.trace)
    d.trace.push_back("refine iter=" + std::to_string(++iter) + " chosen=" + format_bipoly(e.chosen) +
                      " witness=" + std::to_string(e.witness) + " p1=" + format_bipoly(e.out.p1) +
                      " p2=" + format_bipoly(e.out.p2) + " phi_before=" + std::to_string(e.phi_before) +
                      " phi_after=" + std::to_string(e.phi_after));
  for (const BiPoly& g : r.set.members) d.trace.push_back("member " + format_bipoly(g));
  return d;
}

Decoded decode_brute(const ReceivedWord& w, int k, int t, u64 bound) {
  Decoded d{t, oracle::brute_list_decode(w, k, t, bound), {}};
  d.trace.push_back("brute t=" + std::to_string(t));
  return d;
}

}  // namespace

std::string render_decode(const Instance& inst, const DecodeRequest& req) {
  ReceivedWord w(inst.field, inst.points);
  int n = static_cast<int>(w.size()), k = inst.k;
  Decoded d;
  switch (req.algo) {
    case Algo::Sudan:
      if (req.t) fail(ErrorKind::ParseError, "sudan fixes its own threshold; --t is not accepted");
      d = decode_sudan(w, k);
      break;
    case Algo::Gs:
      if (!req.fallback_brute) {
        d = decode_gs(w, k, req.t);
        break;
      }
      {
        int t = req.t ? *req.t : johnson_threshold(n, k);
        Decoded ref = decode_brute(w, k, t, req.brute_bound);
        try {
          d = decode_gs(w, k, req.t);
          if (d.list != ref.list) {
            d.list = ref.list;
            d.trace.push_back("fallback reason=mismatch");
          }
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::Infeasible || e.kind() == ErrorKind::InvalidWord) throw;
          d = ref;
          d.trace.push_back(std::string("fallback reason=") + error_kind_name(e.kind()));
        }
      }
      break;
    case Algo::Brute:
      d = decode_brute(w, k, req.t ? *req.t : johnson_threshold(n, k), req.brute_bound);
      break;
  }

  if (req.json) {
    nlohmann::ordered_json j;
    j["algo"] = algo_name(req.algo);
    j["field"] = format_field(*inst.field);
    j["n"] = n;
    j["k"] = k;
    j["t"] = d.t;
    j["list"] = nlohmann::ordered_json::array();
    for (const UniPoly& f : d.list) j["list"].push_back({{"agreement", agreement(f, w)}, {"poly", format_unipoly(f)}});
    if (req.trace) j["trace"] = d.trace;
    return j.dump(2) + "\n";
  }
  std::string out = "list_size=" + std::to_string(d.list.size()) + "\n";
  for (const UniPoly& f : d.list) out += "agreement=" + std::to_string(agreement(f, w)) + " " + format_unipoly(f) + "\n";
  if (req.trace)
    for (const std::string& e : d.trace) out += "trace " + e + "\n";
  return out;
}

std::string render_params(int n, int k, int t, bool json) {
  DecodeParams p = gs_params(n, k, t);
  ParamMargins mg = param_margins(p);
  if (json) {
    nlohmann::ordered_json j{{"n", n}, {"k", k}, {"t", t}, {"m", p.m}, {"D", p.D},
                             {"kernel_margin", mg.kernel_margin}, {"root_margin", mg.root_margin}};
    return j.dump(2) + "\n";
  }
  return "m=" + std::to_string(p.m) + " D=" + std::to_string(p.D) + "\nkernel_margin=" +
         std::to_string(mg.kernel_margin) + " root_margin=" + std::to_string(mg.root_margin) + "\n";
}

namespace {

// n points at the first field elements; message i agrees on its own block of
// positions, the rest carry values that match neither message.
Instance planted(FieldPtr f, int n, int k, u64 seed, const std::vector<int>& blocks, std::vector<UniPoly>& msgs) {
  CounterRng rng(seed);
  std::vector<Fe> xs = first_points(*f, n);
  for (std::size_t i = 0; i < blocks.size(); ++i) msgs.push_back(random_message(f, k, rng));
  Instance inst{f, k, {}, {"planted seed=" + std::to_string(seed)}};
  int pos = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int c = 0; c < blocks[i]; ++c, ++pos) inst.points.push_back({xs[pos], msgs[i].eval(xs[pos])});
  for (; pos < n; ++pos) {
    Fe y;
    bool hit;
    do {
      y = random_element(*f, rng);
      hit = false;
      for (const UniPoly& m : msgs) hit = hit || m.eval(xs[pos]) == y;
    } while (hit);
    inst.points.push_back({xs[pos], y});
  }
  return inst;
}

}  // namespace

Preset make_preset(std::string_view name) {
  std::vector<UniPoly> msgs;
  if (name == "p61-n32-k4") {
    FieldPtr f = Field::make(kMersenne61, 1, {}, FieldOptions{true});
    return {planted(f, 32, 4, 61, {13, 12}, msgs), 12, std::string(name)};
  }
  if (name == "p101-n64-k8") {
    FieldPtr f = Field::make(101);
    return {planted(f, 64, 8, 101, {26, 24}, msgs), 24, std::string(name)};
  }
  fail(ErrorKind::ParseError, "unknown preset '" + std::string(name) + "'");
}

std::string render_bench(const Preset& p) {
  using clock = std::chrono::steady_clock;
  ReceivedWord w(p.inst.field, p.inst.points);
  int n = static_cast<int>(w.size()), k = p.inst.k;
  std::vector<std::pair<std::string, double>> rows;
  auto t0 = clock::now();
  auto lap = [&](const char* stage) {
    auto t1 = clock::now();
    rows.emplace_back(stage, std::chrono::duration<double, std::milli>(t1 - t0).count());
    t0 = t1;
  };
  DecodeParams params = gs_params(n, k, p.t);
  lap("params");
  std::vector<kernels::Monomial> cols = interpolation_monomials(params.D, k);
  std::vector<Fe> rowdata = kernels::interp_rows(*w.field_ptr(), w.alphas(), w.betas(), params.m, cols);
  lap("interp_rows");
  BiPoly q = build_interpolation(w, params);
  lap("interpolation");
  BiPoly qp = bp_x_content(q).primitive.normalized();
  bool useless = is_useless(qp, w.alphas());
  lap("content");
  SplitStats stats;
  RefinementSet set;
  if (!useless) set = refine(qp, w, &stats);
  lap("refine");
  std::vector<UniPoly> list = useless ? std::vector<UniPoly>{} : extract(set, w, k, p.t);
  lap("extract");

  double total = 0;
  char buf[128];
  std::string out = "preset " + p.name + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                    " t=" + std::to_string(p.t) + " m=" + std::to_string(params.m) + " D=" +
                    std::to_string(params.D) + " threads=" + std::to_string(kernels::max_threads()) + "\n";
  out += "stage           ms\n";
  for (auto& [stage, ms] : rows) {
    std::snprintf(buf, sizeof buf, "%-14s %10.2f\n", stage.c_str(), ms);
    out += buf;
    if (stage != "interp_rows") total += ms;
  }
  std::snprintf(buf, sizeof buf, "%-14s %10.2f\n", "total", total);
  out += buf;
  out += "q_deg_x=" + std::to_string(q.deg_x()) + " q_deg_y=" + std::to_string(q.deg_y()) +
         " refine_iters=" + std::to_string(set.trace.size()) + " splits=" + std::to_string(stats.splits) +
         " lifts=" + std::to_string(stats.lifts) + " systems=" + std::to_string(stats.systems) +
         " max_precision=" + std::to_string(stats.max_precision) + " list_size=" + std::to_string(list.size()) + "\n";
  return out;
}

}  // namespace detrs
