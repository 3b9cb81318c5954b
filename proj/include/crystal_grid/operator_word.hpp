#pragma once

// Words in the Kashiwara operators. A word is stored in written order and
// applied right to left, so "f3 f1" means apply f1 first, then f3.

#include "crystal_grid/cartan.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal_grid {

enum class OpKind { e, f, e_star, f_star };

struct OpStep {
  OpKind kind = OpKind::f;
  Color color = 1;
  friend bool operator==(const OpStep&, const OpStep&) = default;
};

inline std::string to_string(const OpStep& s) {
  std::string out = (s.kind == OpKind::e || s.kind == OpKind::e_star) ? "e" : "f";
  if (s.kind == OpKind::e_star || s.kind == OpKind::f_star) out += '*';
  return out + std::to_string(s.color);
}

class OperatorWord {
 public:
  OperatorWord() = default;
  explicit OperatorWord(std::vector<OpStep> steps) : steps_(std::move(steps)) {}

  /// Parses whitespace-separated tokens like "f4", "e*2", "f1^3".
  static OperatorWord parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<OpStep> steps;
    while (in >> tok) {
      std::size_t pos = 0;
      OpStep step;
      const char head = tok[pos++];
      if (head != 'e' && head != 'f') throw std::invalid_argument("bad operator token '" + tok + "'");
      bool star = pos < tok.size() && tok[pos] == '*';
      if (star) ++pos;
      step.kind = head == 'e' ? (star ? OpKind::e_star : OpKind::e) : (star ? OpKind::f_star : OpKind::f);
      std::size_t digits = pos;
      while (digits < tok.size() && std::isdigit(static_cast<unsigned char>(tok[digits]))) ++digits;
      if (digits == pos) throw std::invalid_argument("operator token '" + tok + "' has no color");
      step.color = std::stoi(tok.substr(pos, digits - pos));
      int power = 1;
      if (digits < tok.size()) {
        if (tok[digits] != '^' || digits + 1 == tok.size()) {
          throw std::invalid_argument("bad operator token '" + tok + "'");
        }
        const auto rest = tok.substr(digits + 1);
        for (char ch : rest)
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad exponent in '" + tok + "'");
        power = std::stoi(rest);
      }
      for (int k = 0; k < power; ++k) steps.push_back(step);
    }
    return OperatorWord(std::move(steps));
  }

  /// Appends k copies of a step on the right (so they are applied first).
  OperatorWord& then_first(OpKind kind, Color color, int k = 1) {
    for (int j = 0; j < k; ++j) steps_.push_back({kind, color});
    return *this;
  }

  const std::vector<OpStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  bool only(OpKind kind) const {
    for (const auto& s : steps_)
      if (s.kind != kind) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
      if (k) out += ' ';
      out += crystal_grid::to_string(steps_[k]);
    }
    return out;
  }

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

 private:
  std::vector<OpStep> steps_;
};

/// Result of applying a word: the final value and every intermediate value,
/// starting with the input. The trace stops at the first 0.
template <class T>
struct WordTrace {
  std::optional<T> result;
  std::vector<std::optional<T>> trace;
};

/// `step(x, op)` applies one operator. Steps run right to left.
template <class T, class StepFn>
WordTrace<T> apply_word(const OperatorWord& word, const T& start, StepFn&& step) {
  WordTrace<T> out;
  std::optional<T> cur = start;
  out.trace.push_back(cur);
  const auto& steps = word.steps();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    cur = step(*cur, *it);
    out.trace.push_back(cur);
    if (!cur) break;
  }
  out.result = cur;
  return out;
}

}  // namespace crystal_grid
