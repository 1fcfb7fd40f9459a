// Preference instances: validated men/women lists with derived rank tables,
// the line-oriented instance file format, and seeded random generation.
//
// Men and women are identified by 0-based indices in the C++ API. Choice
// numbers (positions in a preference list) are 1-based, so that a man at
// choice 1 is proposing to his top woman. The text format is 1-based
// throughout.

#ifndef STABLEPATH_INSTANCE_HPP_
#define STABLEPATH_INSTANCE_HPP_

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stablepath {

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InstanceError {
 public:
  ParseError(int line, const std::string& reason)
      : InstanceError("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

namespace detail {

// Returns an empty string when `row` is a permutation of [0, n).
inline std::string permutation_problem(std::span<const int> row, int n) {
  if (static_cast<int>(row.size()) != n) {
    return "expected " + std::to_string(n) + " entries, got " +
           std::to_string(row.size());
  }
  std::vector<char> seen(n, 0);
  for (int v : row) {
    if (v < 0 || v >= n) {
      return "entry " + std::to_string(v + 1) + " out of range [1.." +
             std::to_string(n) + "]";
    }
    if (seen[v]) return "duplicate entry " + std::to_string(v + 1);
    seen[v] = 1;
  }
  return {};
}

}  // namespace detail

/// Immutable stable-marriage instance with complete preference lists and
/// at least as many women as men.
class Instance {
 public:
  /// `men_prefs[i]` lists women (0-based) best first; `women_prefs[j]` lists
  /// men best first. Throws InstanceError when a row is not a permutation or
  /// when there are more men than women.
  Instance(const std::vector<std::vector<int>>& men_prefs,
           const std::vector<std::vector<int>>& women_prefs)
      : m_(static_cast<int>(men_prefs.size())),
        w_(static_cast<int>(women_prefs.size())) {
    if (m_ < 1) throw InstanceError("instance needs at least one man");
    if (w_ < 1) throw InstanceError("instance needs at least one woman");
    if (m_ > w_) {
      throw InstanceError("more men (" + std::to_string(m_) +
                          ") than women (" + std::to_string(w_) +
                          "); swap the roles of men and women");
    }
    const auto mw = static_cast<std::size_t>(m_) * w_;
    mpref_.resize(mw);
    mrank_.resize(mw);
    wpref_.resize(mw);
    wrank_.resize(mw);
    for (int i = 0; i < m_; ++i) {
      if (auto why = detail::permutation_problem(men_prefs[i], w_); !why.empty())
        throw InstanceError("man " + std::to_string(i + 1) + ": " + why);
      for (int k = 0; k < w_; ++k) {
        const int j = men_prefs[i][k];
        mpref_[idx_m(i, k)] = j;
        mrank_[idx_m(i, j)] = k + 1;
      }
    }
    for (int j = 0; j < w_; ++j) {
      if (auto why = detail::permutation_problem(women_prefs[j], m_); !why.empty())
        throw InstanceError("woman " + std::to_string(j + 1) + ": " + why);
      for (int k = 0; k < m_; ++k) {
        const int i = women_prefs[j][k];
        wpref_[idx_w(j, k)] = i;
        wrank_[idx_w(j, i)] = k + 1;
      }
    }
  }

  int men() const { return m_; }
  int women() const { return w_; }

  /// Woman at 1-based position `choice` of man `man`'s list.
  int woman_at(int man, int choice) const { return mpref_[idx_m(man, choice - 1)]; }
  /// 1-based position of `woman` in `man`'s list.
  int man_choice(int man, int woman) const { return mrank_[idx_m(man, woman)]; }
  /// Man at 1-based position `rank` of `woman`'s list.
  int man_at(int woman, int rank) const { return wpref_[idx_w(woman, rank - 1)]; }
  /// 1-based position of `man` in `woman`'s list; smaller is better.
  int woman_rank(int woman, int man) const { return wrank_[idx_w(woman, man)]; }

  bool man_prefers(int man, int a, int b) const {
    return man_choice(man, a) < man_choice(man, b);
  }
  bool woman_prefers(int woman, int a, int b) const {
    return woman_rank(woman, a) < woman_rank(woman, b);
  }

  std::span<const int> man_list(int man) const {
    return {mpref_.data() + idx_m(man, 0), static_cast<std::size_t>(w_)};
  }
  std::span<const int> woman_list(int woman) const {
    return {wpref_.data() + idx_w(woman, 0), static_cast<std::size_t>(m_)};
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.m_ == b.m_ && a.w_ == b.w_ && a.mpref_ == b.mpref_ &&
           a.wpref_ == b.wpref_;
  }

 private:
  std::size_t idx_m(int man, int k) const {
    return static_cast<std::size_t>(man) * w_ + k;
  }
  std::size_t idx_w(int woman, int k) const {
    return static_cast<std::size_t>(woman) * m_ + k;
  }

  int m_;
  int w_;
  std::vector<int> mpref_;  // m x w, woman ids
  std::vector<int> mrank_;  // m x w, 1-based choice
  std::vector<int> wpref_;  // w x m, man ids
  std::vector<int> wrank_;  // w x m, 1-based rank
};

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line that is neither blank nor a '#' comment.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(t);
  return tokens;
}

inline int parse_positive(const std::string& token, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size())
    throw ParseError(line, "expected an integer, got '" + token + "'");
  if (v < 1 || v > 1'000'000'000)
    throw ParseError(line, "value " + token + " out of range");
  return static_cast<int>(v);
}

inline int parse_header(LineReader& reader, std::string_view key) {
  std::string line;
  if (!reader.next(line))
    throw ParseError(reader.line_no(), "missing '" + std::string(key) + " <count>' header");
  const auto tokens = split_ws(line);
  if (tokens.size() != 2 || tokens[0] != key)
    throw ParseError(reader.line_no(), "expected '" + std::string(key) + " <count>'");
  return parse_positive(tokens[1], reader.line_no());
}

inline void expect_keyword(LineReader& reader, std::string_view key) {
  std::string line;
  if (!reader.next(line))
    throw ParseError(reader.line_no(), "missing '" + std::string(key) + "' section");
  const auto tokens = split_ws(line);
  if (tokens.size() != 1 || tokens[0] != key)
    throw ParseError(reader.line_no(), "expected '" + std::string(key) + "'");
}

inline std::vector<std::vector<int>> parse_rows(LineReader& reader, int rows, int width,
                                                std::string_view who,
                                                std::string_view section) {
  std::vector<std::vector<int>> out;
  out.reserve(rows);
  for (int r = 0; r < rows; ++r) {
    std::string line;
    if (!reader.next(line)) {
      throw ParseError(reader.line_no(), std::string(section) + " has " +
                                             std::to_string(r) + " rows, expected " +
                                             std::to_string(rows));
    }
    const int line_no = reader.line_no();
    const auto tokens = split_ws(line);
    if (tokens.size() == 1 && (tokens[0] == "wpref" || tokens[0] == "mpref")) {
      throw ParseError(line_no, std::string(section) + " has " + std::to_string(r) +
                                    " rows, expected " + std::to_string(rows));
    }
    std::vector<int> row;
    row.reserve(tokens.size());
    for (const auto& t : tokens) row.push_back(parse_positive(t, line_no) - 1);
    if (static_cast<int>(row.size()) != width) {
      throw ParseError(line_no, std::string(who) + " " + std::to_string(r + 1) +
                                    ": incomplete or overlong list, expected " +
                                    std::to_string(width) + " entries, got " +
                                    std::to_string(row.size()));
    }
    if (auto why = permutation_problem(row, width); !why.empty())
      throw ParseError(line_no, std::string(who) + " " + std::to_string(r + 1) + ": " + why);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

/// Parses the instance text format. Errors carry the offending line number.
inline Instance parse_instance(std::istream& in) {
  detail::LineReader reader(in);
  const int m = detail::parse_header(reader, "men");
  const int men_line = reader.line_no();
  const int w = detail::parse_header(reader, "women");
  if (m > w) {
    throw ParseError(men_line, "more men (" + std::to_string(m) + ") than women (" +
                                   std::to_string(w) +
                                   "); swap the roles of men and women");
  }
  detail::expect_keyword(reader, "mpref");
  auto mrows = detail::parse_rows(reader, m, w, "man", "mpref");
  detail::expect_keyword(reader, "wpref");
  auto wrows = detail::parse_rows(reader, w, m, "woman", "wpref");
  std::string extra;
  if (reader.next(extra)) throw ParseError(reader.line_no(), "unexpected trailing content");
  return Instance(mrows, wrows);
}

inline Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "men " << inst.men() << "\nwomen " << inst.women() << "\nmpref\n";
  for (int i = 0; i < inst.men(); ++i) {
    const auto row = inst.man_list(i);
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k] + 1;
    out << '\n';
  }
  out << "wpref\n";
  for (int j = 0; j < inst.women(); ++j) {
    const auto row = inst.woman_list(j);
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k] + 1;
    out << '\n';
  }
  return out.str();
}

/// Uniform random complete lists. Deterministic for a fixed (m, w, seed) with
/// a given standard library.
inline Instance generate_instance(int m, int w, std::uint64_t seed) {
  if (m < 1 || w < 1) throw InstanceError("counts must be positive");
  if (m > w) throw InstanceError("more men than women; swap the roles of men and women");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> mrows(m, std::vector<int>(w));
  std::vector<std::vector<int>> wrows(w, std::vector<int>(m));
  for (auto& row : mrows) {
    std::iota(row.begin(), row.end(), 0);
    std::shuffle(row.begin(), row.end(), rng);
  }
  for (auto& row : wrows) {
    std::iota(row.begin(), row.end(), 0);
    std::shuffle(row.begin(), row.end(), rng);
  }
  return Instance(mrows, wrows);
}

}  // namespace stablepath

#endif  // STABLEPATH_INSTANCE_HPP_
