#include "contingent/transform.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace contingent {

namespace {

std::set<StateSet> superset_closure(const std::vector<StateSet>& collection, StateSet full,
                                    int n) {
  // Breadth-first over single-state additions; visits only sets actually in
  // the closure.
  std::set<StateSet> closed(collection.begin(), collection.end());
  std::vector<StateSet> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<StateSet> next;
    for (StateSet x : frontier) {
      for (int b = 0; b < n; ++b) {
        const StateSet y = x | (1u << b);
        if (y != x && closed.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  (void)full;
  return closed;
}

Frame map_collections(const Frame& frame,
                      const std::function<std::set<StateSet>(const std::vector<StateSet>&)>& fn) {
  std::vector<std::vector<StateSet>> nbhd;
  nbhd.reserve(frame.size());
  for (int s = 0; s < frame.size(); ++s) {
    const std::set<StateSet> collection = fn(frame.neighborhoods(s));
    nbhd.emplace_back(collection.begin(), collection.end());
  }
  return Frame(frame.states(), std::move(nbhd));
}

}  // namespace

Frame supplementation(const Frame& frame) {
  if (frame.size() > kMaxSupplementationStates) {
    throw BoundExceeded("supplementation limited to " +
                        std::to_string(kMaxSupplementationStates) + " states");
  }
  return map_collections(frame, [&](const std::vector<StateSet>& collection) {
    return superset_closure(collection, frame.full_set(), frame.size());
  });
}

Model supplementation(const Model& m) {
  return Model(supplementation(m.frame()), m.valuation());
}

Frame complementation(const Frame& frame) {
  const StateSet full = frame.full_set();
  return map_collections(frame, [&](const std::vector<StateSet>& collection) {
    std::set<StateSet> out(collection.begin(), collection.end());
    for (StateSet x : collection) out.insert(full & ~x);
    return out;
  });
}

Model complementation(const Model& m) {
  return Model(complementation(m.frame()), m.valuation());
}

Frame close_under(const Frame& frame, PropertySet props) {
  if (props.none()) return frame;
  if (frame.size() > kMaxCloseUnderStates) {
    throw BoundExceeded("close_under limited to " + std::to_string(kMaxCloseUnderStates) +
                        " states");
  }
  const StateSet full = frame.full_set();
  const int n = frame.size();
  return map_collections(frame, [&](const std::vector<StateSet>& input) {
    std::set<StateSet> collection(input.begin(), input.end());
    bool changed = true;
    while (changed) {
      changed = false;
      if (props.m) {
        std::vector<StateSet> members(collection.begin(), collection.end());
        const std::set<StateSet> closed = superset_closure(members, full, n);
        if (closed.size() != collection.size()) {
          collection = closed;
          changed = true;
        }
      }
      if (props.c) {
        std::vector<StateSet> members(collection.begin(), collection.end());
        for (StateSet x : members) {
          for (StateSet y : members) {
            if (collection.insert(x & y).second) changed = true;
          }
        }
      }
      if (props.n) {
        if (collection.insert(full).second) changed = true;
      }
      if (props.z) {
        std::vector<StateSet> members(collection.begin(), collection.end());
        for (StateSet x : members) {
          if (collection.insert(full & ~x).second) changed = true;
        }
      }
    }
    return collection;
  });
}

Model close_under(const Model& m, PropertySet props) {
  return Model(close_under(m.frame(), props), m.valuation());
}

Formula star_translate(const Formula& f) {
  switch (f.kind()) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bot:
      return f;
    case Conn::Not:
      return Formula::lnot(star_translate(f.child()));
    case Conn::And:
      return Formula::land(star_translate(f.left()), star_translate(f.right()));
    case Conn::Or:
      return Formula::lor(star_translate(f.left()), star_translate(f.right()));
    case Conn::Imp:
      return Formula::imp(star_translate(f.left()), star_translate(f.right()));
    case Conn::Iff:
      return Formula::iff(star_translate(f.left()), star_translate(f.right()));
    case Conn::Delta: {
      const Formula inner = star_translate(f.child());
      return Formula::lor(Formula::box(inner), Formula::box(Formula::lnot(inner)));
    }
    case Conn::Box:
      throw std::invalid_argument("star translation is defined on Box-free input");
  }
  return f;  // unreachable
}

}  // namespace contingent
