#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hcs {

/// A vertex of a cycle system: the distinguished point `inf`, a plain
/// point label, or a signed point label (used by the doubling step).
///
/// Total order: inf sorts first, labels sort by index, and for signed
/// labels `+` sorts before `-`. Rendering: `inf`, `7`, `7+`, `7-`.
class Vertex {
 public:
  enum class Kind : std::uint8_t { Infinity = 0, Plain = 1, Signed = 2 };

  static Vertex infinity() { return Vertex(Kind::Infinity, -1, 0); }
  static Vertex plain(int index);
  static Vertex with_sign(int index, int sign);  // sign is +1 or -1

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  int index() const { return index_; }  // -1 for inf
  int sign() const { return sign_; }    // 0 unless Kind::Signed

  std::string str() const;
  static Vertex parse(std::string_view token);

  friend bool operator==(const Vertex&, const Vertex&) = default;

  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    const int ra = a.is_infinity() ? 0 : 1;
    const int rb = b.is_infinity() ? 0 : 1;
    if (ra != rb) return ra <=> rb;
    if (ra == 0) return std::strong_ordering::equal;
    if (auto c = a.index_ <=> b.index_; c != 0) return c;
    if (auto c = a.sign_rank() <=> b.sign_rank(); c != 0) return c;
    return a.kind_ <=> b.kind_;
  }

 private:
  Vertex(Kind kind, int index, std::int8_t sign)
      : kind_(kind), index_(index), sign_(sign) {}

  int sign_rank() const { return sign_ < 0 ? 1 : 0; }

  Kind kind_;
  int index_;
  std::int8_t sign_;
};

}  // namespace hcs
