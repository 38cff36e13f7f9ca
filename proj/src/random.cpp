#include "contingent/random.hpp"

#include <limits>
#include <stdexcept>

#include "contingent/transform.hpp"

namespace contingent {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = next_u64();
  } while (draw >= limit);
  return draw % bound;
}

std::vector<std::string> canonical_state_names(int n) {
  static const char* kNames[] = {"s", "t", "u", "v", "w"};
  if (n < 1 || n > 5) throw std::invalid_argument("canonical names cover sizes 1..5");
  return {kNames, kNames + n};
}

StateSet random_state_set(Rng& rng, int n) {
  return static_cast<StateSet>(rng.next_u64() & ((1ull << n) - 1));
}

std::vector<StateSet> random_collection(Rng& rng, int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("random collections cover sizes 1..5");
  const std::uint32_t subsets = 1u << n;
  const std::uint64_t membership = rng.next_u64() & ((subsets == 32) ? 0xFFFFFFFFull
                                                                     : ((1ull << subsets) - 1));
  std::vector<StateSet> out;
  for (std::uint32_t x = 0; x < subsets; ++x) {
    if ((membership >> x) & 1u) out.push_back(x);
  }
  return out;
}

Frame random_frame(Rng& rng, int n) {
  std::vector<std::vector<StateSet>> nbhd;
  nbhd.reserve(n);
  for (int s = 0; s < n; ++s) nbhd.push_back(random_collection(rng, n));
  return Frame(canonical_state_names(n), std::move(nbhd));
}

Frame random_frame_with(Rng& rng, int n, PropertySet props) {
  return close_under(random_frame(rng, n), props);
}

Model random_model(Rng& rng, int n, const std::vector<std::string>& atoms) {
  Frame frame = random_frame(rng, n);
  std::map<std::string, StateSet> valuation;
  for (const auto& atom : atoms) valuation[atom] = random_state_set(rng, n);
  return Model(std::move(frame), std::move(valuation));
}

Formula random_formula(Rng& rng, int depth, const std::vector<std::string>& atoms,
                       bool with_box) {
  const std::uint64_t leaf = rng.below(10);
  if (depth == 0 || leaf < 3) {
    if (leaf == 0) return Formula::top();
    if (leaf == 1) return Formula::bot();
    return Formula::atom(atoms[rng.below(atoms.size())]);
  }
  switch (rng.below(6)) {
    case 0:
      return Formula::lnot(random_formula(rng, depth - 1, atoms, with_box));
    case 1:
      return Formula::land(random_formula(rng, depth - 1, atoms, with_box),
                           random_formula(rng, depth - 1, atoms, with_box));
    case 2:
      return Formula::lor(random_formula(rng, depth - 1, atoms, with_box),
                          random_formula(rng, depth - 1, atoms, with_box));
    case 3:
      return Formula::imp(random_formula(rng, depth - 1, atoms, with_box),
                          random_formula(rng, depth - 1, atoms, with_box));
    case 4:
      return Formula::iff(random_formula(rng, depth - 1, atoms, with_box),
                          random_formula(rng, depth - 1, atoms, with_box));
    default: {
      Formula inner = random_formula(rng, depth - 1, atoms, with_box);
      if (with_box && rng.coin()) return Formula::box(std::move(inner));
      return Formula::delta(std::move(inner));
    }
  }
}

namespace {

int count_connectives(const Formula& f) {
  switch (f.kind()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bot:
      return 0;
    case Conn::Not:
    case Conn::Delta:
    case Conn::Box:
      return 1 + count_connectives(f.child());
    default:
      return 1 + count_connectives(f.left()) + count_connectives(f.right());
  }
}

Formula rebuild_unary(Conn kind, Formula child) {
  switch (kind) {
    case Conn::Not: return Formula::lnot(std::move(child));
    case Conn::Delta: return Formula::delta(std::move(child));
    default: return Formula::box(std::move(child));
  }
}

Formula rebuild_binary(Conn kind, Formula l, Formula r) {
  switch (kind) {
    case Conn::And: return Formula::land(std::move(l), std::move(r));
    case Conn::Or: return Formula::lor(std::move(l), std::move(r));
    case Conn::Imp: return Formula::imp(std::move(l), std::move(r));
    default: return Formula::iff(std::move(l), std::move(r));
  }
}

// Rebuilds the formula flipping the connective at preorder position `target`
// (counting connective nodes only). `target` is decremented in place.
Formula flip_at(Rng& rng, const Formula& f, int& target) {
  switch (f.kind()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bot:
      return f;
    case Conn::Not:
    case Conn::Delta:
    case Conn::Box: {
      if (target-- == 0) {
        static constexpr Conn kUnary[] = {Conn::Not, Conn::Delta, Conn::Box};
        Conn replacement;
        do {
          replacement = kUnary[rng.below(3)];
        } while (replacement == f.kind());
        return rebuild_unary(replacement, f.child());
      }
      return rebuild_unary(f.kind(), flip_at(rng, f.child(), target));
    }
    default: {
      if (target-- == 0) {
        static constexpr Conn kBinary[] = {Conn::And, Conn::Or, Conn::Imp, Conn::Iff};
        Conn replacement;
        do {
          replacement = kBinary[rng.below(4)];
        } while (replacement == f.kind());
        return rebuild_binary(replacement, f.left(), f.right());
      }
      Formula l = f.left();
      Formula r = f.right();
      if (target < count_connectives(l)) {
        return rebuild_binary(f.kind(), flip_at(rng, l, target), std::move(r));
      }
      target -= count_connectives(l);
      return rebuild_binary(f.kind(), std::move(l), flip_at(rng, r, target));
    }
  }
}

}  // namespace

Formula mutate_connective(Rng& rng, const Formula& f) {
  const int total = count_connectives(f);
  if (total == 0) return f;
  int target = static_cast<int>(rng.below(total));
  return flip_at(rng, f, target);
}

}  // namespace contingent
