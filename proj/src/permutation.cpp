#include "hypsys/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hypsys/errors.hpp"

namespace hypsys {

namespace {

bool is_permutation_of_alphabet(const std::vector<int>& row) {
  std::vector<int> sorted = row;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int position_of(const std::vector<int>& row, int label) {
  auto it = std::find(row.begin(), row.end(), label);
  return static_cast<int>(it - row.begin());
}

// Row surgery shared by both right moves: the last entry of `moving` is
// re-inserted just after the position of `anchor` in `moving`.
void insert_after(std::vector<int>& moving, int anchor) {
  const int last = moving.back();
  moving.pop_back();
  const int k = position_of(moving, anchor);
  moving.insert(moving.begin() + k + 1, last);
}

MoveResult right_move(const LabeledPermutation& p, bool top_wins) {
  const int top_last = p.top.back();
  const int bottom_last = p.bottom.back();
  if (top_last == bottom_last)
    throw Error(ErrorKind::UndefinedMove,
                "rauzy move undefined: last labels coincide in " + p.to_string());
  MoveResult r{p, 0, 0};
  if (top_wins) {
    r.winner = top_last;
    r.loser = bottom_last;
    insert_after(r.result.bottom, top_last);
  } else {
    r.winner = bottom_last;
    r.loser = top_last;
    insert_after(r.result.top, bottom_last);
  }
  return r;
}

}  // namespace

std::vector<int> LabeledPermutation::reduced() const {
  const int n = size();
  std::vector<int> bottom_pos(n + 1, -1);
  for (int i = 0; i < n; ++i) bottom_pos[bottom[i]] = i;
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = bottom_pos[top[i]];
  return out;
}

void LabeledPermutation::validate() const {
  if (top.size() != bottom.size() || top.size() < 2)
    throw Error(ErrorKind::InvalidSize, "permutation rows must have equal size >= 2");
  if (!is_permutation_of_alphabet(top) || !is_permutation_of_alphabet(bottom))
    throw Error(ErrorKind::InvalidSize,
                "permutation rows must be permutations of {1..n}: " + to_string());
}

std::string LabeledPermutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < top.size(); ++i) os << (i ? " " : "") << top[i];
  os << " /";
  for (int v : bottom) os << ' ' << v;
  return os.str();
}

LabeledPermutation LabeledPermutation::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw Error(ErrorKind::Parse, "permutation text needs a '/' between rows");
  auto read_row = [](std::string_view part) {
    std::istringstream is{std::string(part)};
    std::vector<int> row;
    int v;
    while (is >> v) row.push_back(v);
    if (!is.eof()) throw Error(ErrorKind::Parse, "non-integer entry in permutation row");
    return row;
  };
  LabeledPermutation p{read_row(text.substr(0, slash)), read_row(text.substr(slash + 1))};
  p.validate();
  return p;
}

char move_letter(Move m) {
  switch (m) {
    case Move::RightT: return 't';
    case Move::RightB: return 'b';
    case Move::LeftT: return 'T';
    case Move::LeftB: return 'B';
  }
  return '?';
}

bool is_right(Move m) { return m == Move::RightT || m == Move::RightB; }

LabeledPermutation central_permutation(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidSize, "central permutation needs n >= 2");
  LabeledPermutation p;
  p.top.resize(n);
  p.bottom.resize(n);
  for (int i = 0; i < n; ++i) {
    p.top[i] = i + 1;
    p.bottom[i] = n - i;
  }
  return p;
}

LabeledPermutation symmetric(const LabeledPermutation& p) {
  LabeledPermutation s;
  s.top.assign(p.bottom.rbegin(), p.bottom.rend());
  s.bottom.assign(p.top.rbegin(), p.top.rend());
  return s;
}

LabeledPermutation row_swap(const LabeledPermutation& p) { return {p.bottom, p.top}; }

MoveResult rauzy_move(const LabeledPermutation& p, Move m) {
  switch (m) {
    case Move::RightT: return right_move(p, true);
    case Move::RightB: return right_move(p, false);
    case Move::LeftT: {
      // top-first wins: s o R_b o s
      if (p.top.front() == p.bottom.front())
        throw Error(ErrorKind::UndefinedMove,
                    "left move undefined: first labels coincide in " + p.to_string());
      MoveResult r = right_move(symmetric(p), false);
      r.result = symmetric(r.result);
      return r;
    }
    case Move::LeftB: {
      if (p.top.front() == p.bottom.front())
        throw Error(ErrorKind::UndefinedMove,
                    "left move undefined: first labels coincide in " + p.to_string());
      MoveResult r = right_move(symmetric(p), true);
      r.result = symmetric(r.result);
      return r;
    }
  }
  throw Error(ErrorKind::UndefinedMove, "unknown move");
}

std::vector<Move> parse_word(std::string_view text) {
  std::vector<Move> word;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    Move m;
    switch (c) {
      case 't': m = Move::RightT; break;
      case 'b': m = Move::RightB; break;
      case 'T': m = Move::LeftT; break;
      case 'B': m = Move::LeftB; break;
      default:
        throw Error(ErrorKind::Parse, std::string("unexpected character in word: ") + c);
    }
    ++i;
    long repeat = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw Error(ErrorKind::Parse, "missing exponent after '^'");
      repeat = std::stol(std::string(text.substr(i, j - i)));
      i = j;
    }
    word.insert(word.end(), repeat, m);
  }
  return word;
}

std::string format_word(const std::vector<Move>& word, bool run_length) {
  std::string out;
  if (!run_length) {
    for (Move m : word) out.push_back(move_letter(m));
    return out;
  }
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out.push_back(' ');
    out.push_back(move_letter(word[i]));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace hypsys
