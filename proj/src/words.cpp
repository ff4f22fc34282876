#include "mzvlab/words.hpp"

namespace mzvlab {

Word word_of_index(const Index& k) {
  std::vector<std::uint8_t> ls;
  for (unsigned ki : k.entries()) {
    ls.push_back(1);
    for (unsigned j = 1; j < ki; ++j) ls.push_back(0);
  }
  return Word(std::move(ls));
}

Index index_of_word(const Word& w) {
  if (!w.in_h1()) throw std::invalid_argument("index_of_word: word starts with e0");
  std::vector<unsigned> ks;
  for (std::uint8_t u : w.letters()) {
    if (u == 1) ks.push_back(1);
    else ks.back() += 1;
  }
  return Index(std::move(ks));
}

namespace {

Word word_cat(const Word& a, const Word& b) {
  auto v = a.letters();
  v.insert(v.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(v));
}

WordPoly<Rat> append_all(const WordPoly<Rat>& p, const Word& tail) {
  WordPoly<Rat> out;
  for (const auto& [w, c] : p.terms()) out.add_term(word_cat(w, tail), c);
  return out;
}

using Memo = std::map<std::pair<Word, Word>, WordPoly<Rat>>;

const WordPoly<Rat>& shuffle_memo(const Word& a, const Word& b) {
  static Memo memo;
  if (b < a) return shuffle_memo(b, a);
  auto it = memo.find({a, b});
  if (it != memo.end()) return it->second;
  WordPoly<Rat> r;
  if (a.empty()) {
    r = WordPoly<Rat>(b, Rat(1));
  } else if (b.empty()) {
    r = WordPoly<Rat>(a, Rat(1));
  } else {
    Word la(std::vector<std::uint8_t>{a.letters().back()});
    Word lb(std::vector<std::uint8_t>{b.letters().back()});
    r = append_all(shuffle_memo(a.dropped_last(), b), la) +
        append_all(shuffle_memo(a, b.dropped_last()), lb);
  }
  return memo.emplace(std::make_pair(a, b), std::move(r)).first->second;
}

const WordPoly<Rat>& stuffle_memo(const Word& a, const Word& b) {
  static Memo memo;
  if (b < a) return stuffle_memo(b, a);
  auto it = memo.find({a, b});
  if (it != memo.end()) return it->second;
  WordPoly<Rat> r;
  if (a.empty()) {
    r = WordPoly<Rat>(b, Rat(1));
  } else if (b.empty()) {
    r = WordPoly<Rat>(a, Rat(1));
  } else {
    Index ia = index_of_word(a), ib = index_of_word(b);
    unsigned k = ia[ia.depth() - 1], l = ib[ib.depth() - 1];
    Word wa1 = word_of_index(ia.prefix(ia.depth() - 1));
    Word wb1 = word_of_index(ib.prefix(ib.depth() - 1));
    r = append_all(stuffle_memo(wa1, b), word_of_index({k})) +
        append_all(stuffle_memo(a, wb1), word_of_index({l})) +
        append_all(stuffle_memo(wa1, wb1), word_of_index({k + l}));
  }
  return memo.emplace(std::make_pair(a, b), std::move(r)).first->second;
}

}  // namespace

const WordPoly<Rat>& shuffle_words(const Word& a, const Word& b) { return shuffle_memo(a, b); }

const WordPoly<Rat>& stuffle_words(const Word& a, const Word& b) {
  if (!a.in_h1() || !b.in_h1()) throw std::invalid_argument("stuffle: words must lie in H^1");
  return stuffle_memo(a, b);
}

WordPoly<RatPoly> K_t(const Index& k, const Index& l, unsigned a) {
  if (a < 1) throw std::invalid_argument("K_t: a must be >= 1");
  // closed alternating-sum form; m = reverse of l so the arguments match the
  // upright (k over l; a) orientation
  Index m = l.reversed();
  RatPoly t = tpoly_t(), omt = tpoly_1mt(), one(Rat(1));
  WordPoly<RatPoly> out;
  for (size_t j = 0; j <= m.depth(); ++j) {
    Index left = concat(concat(k, Index{a}), m.prefix(j));
    Index right = m.suffix(j).reversed();
    WordPoly<RatPoly> term =
        stuffle(S_t(left, t, one),
                S_t(right, omt, one));
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

}  // namespace mzvlab
