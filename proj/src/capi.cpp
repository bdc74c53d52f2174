#include "braidforge/braidforge.h"

#include <new>
#include <string>

#include "convert.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "json_out.hpp"
#include "render.hpp"
#include "spec_text.hpp"

struct bf_result {
  int status = BF_OK;
  std::string payload;
  std::string error;
};

namespace {

using namespace braidforge;

template <typename Fn>
bf_result* guarded(Fn&& fn) {
  auto* r = new (std::nothrow) bf_result;
  if (!r) return nullptr;
  try {
    r->payload = fn();
  } catch (const ParseError& e) {
    r->status = BF_PARSE_ERROR;
    r->error = e.what();
  } catch (const ValidationError& e) {
    r->status = BF_VALIDATION_ERROR;
    r->error = e.what();
  } catch (const std::bad_alloc&) {
    r->status = BF_VALIDATION_ERROR;
    r->error = "out of memory";
  } catch (const std::exception& e) {
    r->status = BF_INTERNAL_ERROR;
    r->error = e.what();
  }
  return r;
}

bf_result* spec_command(const char* command, const char* spec, int jones_limit) {
  std::string text = spec ? spec : "";
  return guarded([&] {
    CommandOptions opts;
    if (jones_limit >= 0) opts.jones_limit = jones_limit;
    return run_command(command, text, opts).dump(2);
  });
}

}  // namespace

extern "C" {

int bf_result_status(const bf_result* r) { return r ? r->status : BF_INTERNAL_ERROR; }

const char* bf_result_json(const bf_result* r) {
  return (r && r->status == BF_OK) ? r->payload.c_str() : nullptr;
}

const char* bf_result_error(const bf_result* r) {
  return (r && r->status != BF_OK) ? r->error.c_str() : nullptr;
}

void bf_result_free(bf_result* r) { delete r; }

const char* bf_version(void) { return "braidforge 1.0.0"; }

bf_result* bf_convert(const char* spec, int jones_limit) {
  return spec_command("convert", spec, jones_limit);
}

bf_result* bf_classify(const char* spec, int jones_limit) {
  return spec_command("classify", spec, jones_limit);
}

bf_result* bf_verify(const char* spec, int jones_limit) {
  return spec_command("verify", spec, jones_limit);
}

bf_result* bf_profile(const char* spec, int jones_limit) {
  return spec_command("profile", spec, jones_limit);
}

bf_result* bf_render(const char* spec) {
  std::string text = spec ? spec : "";
  return guarded([&] {
    ParsedSpec parsed = parse_spec(text);
    BraidWord w = std::holds_alternative<TLinkSpec>(parsed)
                      ? minimal_braid(normalize_t(std::get<TLinkSpec>(parsed)))
                      : braid_of_v(std::get<VLinkSpec>(parsed));
    return render_ascii(w);
  });
}

bf_result* bf_classify_line(const char* spec) {
  std::string text = spec ? spec : "";
  return guarded([&] {
    ParsedSpec parsed = parse_spec(text);
    if (!std::holds_alternative<TLinkSpec>(parsed))
      throw ValidationError("enumeration records are defined for T-specs");
    return enumerate_line(std::get<TLinkSpec>(parsed)).dump();
  });
}

bf_result* bf_enumerate_specs(int p_max, int q_max, int block_max, long long skip, int workers) {
  return guarded([&] {
    EnumBounds bounds{p_max, q_max, block_max};
    return run_enumeration(bounds, skip < 0 ? 0 : skip, workers <= 0 ? 1 : workers);
  });
}

}  // extern "C"
