#include "render.hpp"

#include "errors.hpp"

namespace braidforge {

std::string render_ascii(const BraidWord& w) {
  if (w.crossing_count() > 100000) throw ValidationError("render: word too long");
  std::string out;
  for (int l : w.letters()) {
    std::string row(static_cast<std::size_t>(w.strands()), '|');
    row[l - 1] = '\\';
    row[l] = '/';
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace braidforge
