#pragma once

#include <optional>
#include <string>

#include "detrs/text_io.hpp"

// Output of the CLI subcommands, shared with the tests so golden files and
// determinism checks go through exactly the code the binary runs.
namespace detrs {

enum class Algo { Sudan, Gs, Brute };
Algo parse_algo(std::string_view s);

struct DecodeRequest {
  Algo algo = Algo::Gs;
  std::optional<int> t;
  bool trace = false;
  bool json = false;
  bool fallback_brute = false;  // cross-check against brute force and prefer it on mismatch
  u64 brute_bound = 1'000'000;
};

// Text form:
//   list_size=<N>
//   agreement=<a> <poly>      (one per list member, canonical order)
//   trace <event ...>         (only with trace)
std::string render_decode(const Instance& inst, const DecodeRequest& req);

// "m=<m> D=<D>" then "kernel_margin=<..> root_margin=<..>".
std::string render_params(int n, int k, int t, bool json);

// Deterministic benchmark instances.
struct Preset {
  Instance inst;
  int t;
  std::string name;
};
Preset make_preset(std::string_view name);  // ParseError on unknown names

// Wall time per decoding stage, one row per stage.
std::string render_bench(const Preset& p);

}  // namespace detrs
