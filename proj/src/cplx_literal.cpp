#include "eulerg/cplx_literal.hpp"

#include <charconv>
#include <cctype>
#include <cmath>

namespace eulerg {
namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::Parse, "complex literal \"" + std::string(text) + "\": " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Reads an optionally signed decimal at s[pos]; a sign followed directly by
// 'i' (or a lone 'i') reads as magnitude 1.
bool read_real(std::string_view s, std::size_t& pos, double& out) {
  double sign = 1.0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign = -1.0;
    ++pos;
  }
  if (pos < s.size() && s[pos] == 'i') {
    out = sign;
    return true;
  }
  // from_chars would accept a second '-' on its own.
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) return false;
  double v = 0.0;
  const auto res = std::from_chars(s.data() + pos, s.data() + s.size(), v, std::chars_format::general);
  if (res.ec != std::errc{}) return false;
  pos = static_cast<std::size_t>(res.ptr - s.data());
  out = sign * v;
  return true;
}

}  // namespace

Cplx parse_cplx(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad(text, "empty");
  std::size_t pos = 0;
  double first = 0.0;
  if (!read_real(s, pos, first)) bad(text, "expected a number");
  if (pos == s.size()) return {first, 0.0};
  if (s[pos] == 'i') {
    if (pos + 1 != s.size()) bad(text, "trailing characters");
    return {0.0, first};
  }
  if (s[pos] != '+' && s[pos] != '-') bad(text, "expected '+', '-' or 'i'");
  double second = 0.0;
  if (!read_real(s, pos, second)) bad(text, "expected an imaginary part");
  if (pos + 1 != s.size() || s[pos] != 'i') bad(text, "imaginary part must end in 'i'");
  return {first, second};
}

std::vector<Cplx> parse_cplx_list(std::string_view text) {
  std::vector<Cplx> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_cplx(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                   : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_cplx(Cplx z) {
  std::string s = format_double(z.real());
  if (std::signbit(z.imag()))
    s += "-" + format_double(-z.imag());
  else
    s += "+" + format_double(z.imag());
  return s + "i";
}

GridSpec parse_grid(std::string_view text) {
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
    throw Error(ErrorKind::Parse, "grid \"" + std::string(text) + "\" must be start:stop:count");
  GridSpec g;
  g.start = parse_cplx(text.substr(0, c1));
  g.stop = parse_cplx(text.substr(c1 + 1, c2 - c1 - 1));
  const std::string_view n = trim(text.substr(c2 + 1));
  const auto res = std::from_chars(n.data(), n.data() + n.size(), g.count);
  if (res.ec != std::errc{} || res.ptr != n.data() + n.size() || g.count < 1)
    throw Error(ErrorKind::Parse, "grid count \"" + std::string(n) + "\" must be a positive integer");
  return g;
}

std::vector<Cplx> linspace(const GridSpec& grid) {
  std::vector<Cplx> out;
  out.reserve(static_cast<std::size_t>(grid.count));
  if (grid.count == 1) {
    out.push_back(grid.start);
    return out;
  }
  const Cplx step = (grid.stop - grid.start) / static_cast<double>(grid.count - 1);
  for (int k = 0; k < grid.count - 1; ++k) out.push_back(grid.start + static_cast<double>(k) * step);
  out.push_back(grid.stop);
  return out;
}

}  // namespace eulerg
