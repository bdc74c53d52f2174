#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "braidforge/braidforge.h"

namespace {

struct Options {
  std::string spec;
  std::string out;
  std::string bounds = "5,5,2";
  int jones_limit = 16;
  int workers = 1;
  long long skip = 0;
  int seed = 0;  // reserved; all commands are deterministic
};

bool parse_bounds(const std::string& text, int& p, int& q, int& b) {
  return std::sscanf(text.c_str(), "%d,%d,%d", &p, &q, &b) == 3;
}

int finish(bf_result* r, const std::string& out_path) {
  int status = bf_result_status(r);
  if (status == BF_OK) {
    const char* payload = bf_result_json(r);
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot open " << out_path << "\n";
        bf_result_free(r);
        return 3;
      }
      f << payload;
      if (*payload && payload[std::string(payload).size() - 1] != '\n') f << '\n';
    } else {
      std::cout << payload;
      std::string s = payload;
      if (!s.empty() && s.back() != '\n') std::cout << '\n';
    }
  } else {
    std::cerr << "error: " << bf_result_error(r) << "\n";
  }
  bf_result_free(r);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive-braid link toolkit: spec conversion, geometric classification, "
               "invariant verification"};
  app.require_subcommand(1);

  Options opt;
  int rc = 0;

  auto add_common = [&](CLI::App* sub, bool with_spec) {
    if (with_spec)
      sub->add_option("spec", opt.spec, "link spec, e.g. T[(2,3)] or V[(2,~2);;(3,5)]")
          ->required();
    sub->add_option("--out", opt.out, "write output to a file instead of stdout");
    sub->add_option("--seed", opt.seed, "reserved (commands are deterministic)");
  };

  for (const char* name : {"convert", "classify", "verify", "profile"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string(name) + " a link spec and emit the JSON document");
    add_common(sub, true);
    sub->add_option("--jones-limit", opt.jones_limit,
                    "max crossings for the bracket polynomial (default 16)");
    std::string cmd = name;
    sub->callback([&, cmd] {
      bf_result* r = cmd == "convert"    ? bf_convert(opt.spec.c_str(), opt.jones_limit)
                     : cmd == "classify" ? bf_classify(opt.spec.c_str(), opt.jones_limit)
                     : cmd == "verify"   ? bf_verify(opt.spec.c_str(), opt.jones_limit)
                                         : bf_profile(opt.spec.c_str(), opt.jones_limit);
      rc = finish(r, opt.out);
    });
  }

  CLI::App* render = app.add_subcommand("render", "ASCII diagram of the spec's minimal braid");
  add_common(render, true);
  render->callback([&] { rc = finish(bf_render(opt.spec.c_str()), opt.out); });

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "classify every normalized T-spec within bounds (JSONL)");
  add_common(enumerate, false);
  enumerate->add_option("--bounds", opt.bounds, "p_max,q_max,block_max (default 5,5,2)");
  enumerate->add_option("--workers", opt.workers, "parallel record computation (default 1)");
  enumerate->add_option("--skip", opt.skip, "skip the first N records (resume by line count)");
  enumerate->callback([&] {
    int p, q, b;
    if (!parse_bounds(opt.bounds, p, q, b)) {
      std::cerr << "error: --bounds expects p,q,b\n";
      rc = 3;
      return;
    }
    rc = finish(bf_enumerate_specs(p, q, b, opt.skip, opt.workers), opt.out);
  });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
