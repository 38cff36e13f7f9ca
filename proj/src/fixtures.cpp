#include "contingent/fixtures.hpp"

#include <stdexcept>

namespace contingent {

namespace {

constexpr std::string_view kModelCNotDc = R"(states: s t
N s: {s}
N t:
V p: s
)";

constexpr std::string_view kModelCnNotDc = R"(states: s t u
N s: {s} {s t} {s t u}
N t: {s t u}
N u: {s t u}
V p: s t
V q: t u
)";

constexpr std::string_view kModelMcnNotSdm = R"(states: s t u
N s: {t u} {s t u}
N t: {s t u}
N u: {s t u}
V p: s
V q: t
)";

// dC' (instance over p, q) from dC.
constexpr std::string_view kDerivationDcPrimeFromDc =
    R"(system: R-delta
1. D(q->p) & D(~q->p) -> D((q->p) & (~q->p))  axiom dC phi=q->p; psi=~q->p
2. ((q->p) & (~q->p)) <-> p  taut
3. D((q->p) & (~q->p)) <-> Dp  re-delta 2
4. (D(q->p) & D(~q->p) -> D((q->p) & (~q->p))) -> ((D((q->p) & (~q->p)) <-> Dp) -> (D(q->p) & D(~q->p) -> Dp))  taut
5. (D((q->p) & (~q->p)) <-> Dp) -> (D(q->p) & D(~q->p) -> Dp)  mp 1 4
6. D(q->p) & D(~q->p) -> Dp  mp 3 5
)";

// dC (instance over p, q) from dC'. The chains of biconditional rewrites
// are spelled out as explicit taut/mp steps.
constexpr std::string_view kDerivationDcFromDcPrime =
    R"(system: M-delta+dC'
1. Dp -> D(p | (p & q)) | D(~p | ~q)  axiom dM phi=p; psi=p & q; chi=~q
2. Dq -> D(q | ~p) | D(~q | ~p)  axiom dM phi=q; psi=~p; chi=~p
3. (~p | ~q) <-> (~q | ~p)  taut
4. D(~p | ~q) <-> D(~q | ~p)  re-delta 3
5. (Dp -> D(p | (p & q)) | D(~p | ~q)) -> ((Dq -> D(q | ~p) | D(~q | ~p)) -> ((D(~p | ~q) <-> D(~q | ~p)) -> (Dp & Dq -> D(~p | ~q) | (D(p | (p & q)) & D(q | ~p)))))  taut
6. (Dq -> D(q | ~p) | D(~q | ~p)) -> ((D(~p | ~q) <-> D(~q | ~p)) -> (Dp & Dq -> D(~p | ~q) | (D(p | (p & q)) & D(q | ~p))))  mp 1 5
7. (D(~p | ~q) <-> D(~q | ~p)) -> (Dp & Dq -> D(~p | ~q) | (D(p | (p & q)) & D(q | ~p)))  mp 2 6
8. Dp & Dq -> D(~p | ~q) | (D(p | (p & q)) & D(q | ~p))  mp 4 7
9. (q | ~p) <-> (~p | (p & q))  taut
10. D(q | ~p) <-> D(~p | (p & q))  re-delta 9
11. (Dp & Dq -> D(~p | ~q) | (D(p | (p & q)) & D(q | ~p))) -> ((D(q | ~p) <-> D(~p | (p & q))) -> (Dp & Dq -> D(~p | ~q) | (D(p | (p & q)) & D(~p | (p & q)))))  taut
12. (D(q | ~p) <-> D(~p | (p & q))) -> (Dp & Dq -> D(~p | ~q) | (D(p | (p & q)) & D(~p | (p & q))))  mp 8 11
13. Dp & Dq -> D(~p | ~q) | (D(p | (p & q)) & D(~p | (p & q)))  mp 10 12
14. (p | (p & q)) <-> (~p -> p & q)  taut
15. D(p | (p & q)) <-> D(~p -> p & q)  re-delta 14
16. (~p | (p & q)) <-> (p -> p & q)  taut
17. D(~p | (p & q)) <-> D(p -> p & q)  re-delta 16
18. D(p & q) <-> D~(p & q)  axiom dEqu phi=p & q
19. ~(p & q) <-> (~p | ~q)  taut
20. D~(p & q) <-> D(~p | ~q)  re-delta 19
21. (D(p & q) <-> D~(p & q)) -> ((D~(p & q) <-> D(~p | ~q)) -> (D(~p | ~q) <-> D(p & q)))  taut
22. (D~(p & q) <-> D(~p | ~q)) -> (D(~p | ~q) <-> D(p & q))  mp 18 21
23. D(~p | ~q) <-> D(p & q)  mp 20 22
24. (Dp & Dq -> D(~p | ~q) | (D(p | (p & q)) & D(~p | (p & q)))) -> ((D(p | (p & q)) <-> D(~p -> p & q)) -> ((D(~p | (p & q)) <-> D(p -> p & q)) -> ((D(~p | ~q) <-> D(p & q)) -> (Dp & Dq -> D(p & q) | (D(~p -> p & q) & D(p -> p & q))))))  taut
25. (D(p | (p & q)) <-> D(~p -> p & q)) -> ((D(~p | (p & q)) <-> D(p -> p & q)) -> ((D(~p | ~q) <-> D(p & q)) -> (Dp & Dq -> D(p & q) | (D(~p -> p & q) & D(p -> p & q)))))  mp 13 24
26. (D(~p | (p & q)) <-> D(p -> p & q)) -> ((D(~p | ~q) <-> D(p & q)) -> (Dp & Dq -> D(p & q) | (D(~p -> p & q) & D(p -> p & q))))  mp 15 25
27. (D(~p | ~q) <-> D(p & q)) -> (Dp & Dq -> D(p & q) | (D(~p -> p & q) & D(p -> p & q)))  mp 17 26
28. Dp & Dq -> D(p & q) | (D(~p -> p & q) & D(p -> p & q))  mp 23 27
29. D(~p -> p & q) & D(~~p -> p & q) -> D(p & q)  axiom dC' phi=p & q; psi=~p
30. (~~p -> p & q) <-> (p -> p & q)  taut
31. D(~~p -> p & q) <-> D(p -> p & q)  re-delta 30
32. (D(~p -> p & q) & D(~~p -> p & q) -> D(p & q)) -> ((D(~~p -> p & q) <-> D(p -> p & q)) -> (D(~p -> p & q) & D(p -> p & q) -> D(p & q)))  taut
33. (D(~~p -> p & q) <-> D(p -> p & q)) -> (D(~p -> p & q) & D(p -> p & q) -> D(p & q))  mp 29 32
34. D(~p -> p & q) & D(p -> p & q) -> D(p & q)  mp 31 33
35. (Dp & Dq -> D(p & q) | (D(~p -> p & q) & D(p -> p & q))) -> ((D(~p -> p & q) & D(p -> p & q) -> D(p & q)) -> (Dp & Dq -> D(p & q)))  taut
36. (D(~p -> p & q) & D(p -> p & q) -> D(p & q)) -> (Dp & Dq -> D(p & q))  mp 28 35
37. Dp & Dq -> D(p & q)  mp 34 36
)";

// dM' (instance over p, q, r) from dM.
constexpr std::string_view kDerivationDmPrimeFromDm =
    R"(system: M-delta
1. Dp -> D(p | r) | D(~p | q)  axiom dM phi=p; psi=r; chi=q
2. (p | r) <-> (~p -> r)  taut
3. D(p | r) <-> D(~p -> r)  re-delta 2
4. (~p | q) <-> (p -> q)  taut
5. D(~p | q) <-> D(p -> q)  re-delta 4
6. (Dp -> D(p | r) | D(~p | q)) -> ((D(p | r) <-> D(~p -> r)) -> ((D(~p | q) <-> D(p -> q)) -> (Dp -> D(p -> q) | D(~p -> r))))  taut
7. (D(p | r) <-> D(~p -> r)) -> ((D(~p | q) <-> D(p -> q)) -> (Dp -> D(p -> q) | D(~p -> r)))  mp 1 6
8. (D(~p | q) <-> D(p -> q)) -> (Dp -> D(p -> q) | D(~p -> r))  mp 3 7
9. Dp -> D(p -> q) | D(~p -> r)  mp 5 8
)";

// dM (instance over p, q, r) from dM'.
constexpr std::string_view kDerivationDmFromDmPrime =
    R"(system: E-delta+dM'
1. Dp -> D(p -> r) | D(~p -> q)  axiom dM' phi=p; psi=r; chi=q
2. (p -> r) <-> (~p | r)  taut
3. D(p -> r) <-> D(~p | r)  re-delta 2
4. (~p -> q) <-> (p | q)  taut
5. D(~p -> q) <-> D(p | q)  re-delta 4
6. (Dp -> D(p -> r) | D(~p -> q)) -> ((D(p -> r) <-> D(~p | r)) -> ((D(~p -> q) <-> D(p | q)) -> (Dp -> D(p | q) | D(~p | r))))  taut
7. (D(p -> r) <-> D(~p | r)) -> ((D(~p -> q) <-> D(p | q)) -> (Dp -> D(p | q) | D(~p | r)))  mp 1 6
8. (D(~p -> q) <-> D(p | q)) -> (Dp -> D(p | q) | D(~p | r))  mp 3 7
9. Dp -> D(p | q) | D(~p | r)  mp 5 8
)";

}  // namespace

const std::vector<FixtureText>& fixture_model_texts() {
  static const std::vector<FixtureText> texts = {
      {"c_not_dc", kModelCNotDc},
      {"cn_not_dc", kModelCnNotDc},
      {"mcn_not_sdm", kModelMcnNotSdm},
  };
  return texts;
}

const std::vector<FixtureText>& fixture_derivation_texts() {
  static const std::vector<FixtureText> texts = {
      {"dcprime_from_dc", kDerivationDcPrimeFromDc},
      {"dc_from_dcprime", kDerivationDcFromDcPrime},
      {"dmprime_from_dm", kDerivationDmPrimeFromDm},
      {"dm_from_dmprime", kDerivationDmFromDmPrime},
  };
  return texts;
}

Model fixture_model(std::string_view name) {
  for (const auto& entry : fixture_model_texts()) {
    if (entry.name == name) return parse_model(entry.text);
  }
  throw std::invalid_argument("unknown fixture model '" + std::string(name) + "'");
}

Derivation fixture_derivation(std::string_view name) {
  for (const auto& entry : fixture_derivation_texts()) {
    if (entry.name == name) return parse_derivation(entry.text);
  }
  throw std::invalid_argument("unknown fixture derivation '" + std::string(name) + "'");
}

}  // namespace contingent
