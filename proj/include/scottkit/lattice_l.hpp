#pragma once

#include <scottkit/bignat.hpp>
#include <scottkit/sequences.hpp>

#include <optional>
#include <string>
#include <variant>

namespace scottkit {

// The column fibre: naturals >= 1 under the numeric order, nonempty
// sequences under the prefix order, the two kinds mutually incomparable,
// and a top element above everything.
struct LTop {
  friend bool operator==(const LTop&, const LTop&) { return true; }
};

using LElem = std::variant<Nat, Seq, LTop>;

inline bool lelem_valid(const LElem& v) {
  if (const Nat* k = std::get_if<Nat>(&v)) return *k >= 1;
  if (const Seq* s = std::get_if<Seq>(&v)) return !s->empty() && seq_entries_valid(*s);
  return true;
}

inline bool is_top(const LElem& v) { return std::holds_alternative<LTop>(v); }

inline bool operator==(const LElem& a, const LElem& b) {
  return a.index() == b.index() &&
         std::visit([&](const auto& x) {
           using T = std::decay_t<decltype(x)>;
           return x == std::get<T>(b);
         }, a);
}

inline bool leq_L(const LElem& a, const LElem& b) {
  if (is_top(b)) return true;
  if (is_top(a)) return false;
  if (a.index() != b.index()) return false;
  if (const Nat* j = std::get_if<Nat>(&a)) return *j <= std::get<Nat>(b);
  return is_prefix(std::get<Seq>(a), std::get<Seq>(b));
}

inline bool lt_L(const LElem& a, const LElem& b) { return !(a == b) && leq_L(a, b); }

// Binary join. Always defined: an incomparable pair has no bound below top
// (two sequences bounded by a third would both be prefixes of it, hence
// comparable; mixed kinds are bounded only by top).
inline LElem lub_L(const LElem& a, const LElem& b) {
  if (leq_L(a, b)) return b;
  if (leq_L(b, a)) return a;
  return LTop{};
}

inline std::string lelem_str(const LElem& v) {
  if (const Nat* k = std::get_if<Nat>(&v)) return "n:" + k->str();
  if (const Seq* s = std::get_if<Seq>(&v)) return "s:" + seq_str(*s);
  return "top";
}

inline std::optional<LElem> lelem_parse(const std::string& text) {
  if (text == "top") return LElem{LTop{}};
  auto parse_nat = [](const std::string& t) -> std::optional<Nat> {
    if (t.empty()) return std::nullopt;
    for (char c : t)
      if (c < '0' || c > '9') return std::nullopt;
    return Nat(t);
  };
  if (text.rfind("n:", 0) == 0) {
    auto k = parse_nat(text.substr(2));
    if (!k || *k < 1) return std::nullopt;
    return LElem{*k};
  }
  if (text.rfind("s:[", 0) == 0 && text.back() == ']') {
    std::string body = text.substr(3, text.size() - 4);
    Seq s;
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      auto k = parse_nat(body.substr(pos, comma - pos));
      if (!k || *k < 1) return std::nullopt;
      s.push_back(*k);
      pos = comma + 1;
    }
    if (s.empty()) return std::nullopt;
    return LElem{s};
  }
  return std::nullopt;
}

}  // namespace scottkit
