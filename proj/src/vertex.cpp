#include "hcs/vertex.hpp"

#include <charconv>
#include <stdexcept>

namespace hcs {

Vertex Vertex::plain(int index) {
  if (index < 0) throw std::invalid_argument("vertex index must be non-negative");
  return Vertex(Kind::Plain, index, 0);
}

Vertex Vertex::with_sign(int index, int sign) {
  if (index < 0) throw std::invalid_argument("vertex index must be non-negative");
  if (sign != 1 && sign != -1) throw std::invalid_argument("vertex sign must be +1 or -1");
  return Vertex(Kind::Signed, index, static_cast<std::int8_t>(sign));
}

std::string Vertex::str() const {
  switch (kind_) {
    case Kind::Infinity: return "inf";
    case Kind::Plain: return std::to_string(index_);
    case Kind::Signed: return std::to_string(index_) + (sign_ > 0 ? '+' : '-');
  }
  throw std::logic_error("unreachable vertex kind");
}

Vertex Vertex::parse(std::string_view token) {
  if (token == "inf") return infinity();
  if (token.empty()) throw std::invalid_argument("empty vertex token");

  int sign = 0;
  std::string_view digits = token;
  if (token.back() == '+' || token.back() == '-') {
    sign = token.back() == '+' ? 1 : -1;
    digits = token.substr(0, token.size() - 1);
  }
  int index = 0;
  const auto [ptr, ec] = std::from_chars(digits.begin(), digits.end(), index);
  if (ec != std::errc() || ptr != digits.end() || digits.empty() || index < 0)
    throw std::invalid_argument("bad vertex token '" + std::string(token) + "'");
  return sign == 0 ? plain(index) : with_sign(index, sign);
}

}  // namespace hcs
