#pragma once

#include <span>
#include <string_view>

namespace omplab {

/// A shipped derivation. p, q, r stand for arbitrary formulas.
struct Fixture {
  std::string_view id;
  std::string_view statement;
  std::string_view text;
};

inline constexpr Fixture kFixtures[] = {
    {"lem1-i", "p->q, q->r |- p->r",
     R"(hyp |- (p->q)
hyp |- (q->r)
goal |- (p->r)
1. |- (p->q) ; HYP [1]
2. |- (q->r) ; HYP [2]
3. |- ((q->r)->(p->r)) ; Sf [1] {chi:=r}
4. |- (p->r) ; MP [2,3]
)"},
    {"lem1-ii", "|- p->(0->0)",
     R"(goal |- (p->(0->0))
1. |- (0->0) ; B2
2. |- ((0->0)->(p->(0->0))) ; B1 {phi:=(0->0), psi:=p}
3. |- (p->(0->0)) ; MP [1,2]
)"},
    {"th3-i", "|- p->p",
     R"(goal |- (p->p)
1. |- (p->p) ; B2
)"},
    {"th3-ii", "p->q |- p->q",
     R"(hyp |- (p->q)
goal |- (p->q)
1. |- ((p->q)->(p->q)) ; B2
2. |- (p->q) ; HYP [1]
3. |- (p->q) ; MP [2,1]
)"},
    {"th3-iii", "p->q, q->r |- p->r",
     R"(hyp |- (p->q)
hyp |- (q->r)
goal |- (p->r)
1. |- (p->q) ; HYP [1]
2. |- (q->r) ; HYP [2]
3. |- ((q->r)->(p->r)) ; Sf [1] {chi:=r}
4. |- (p->r) ; MP [2,3]
)"},
    {"th3-iv-1", "p->q |- (q->r)->(p->r)",
     R"(hyp |- (p->q)
goal |- ((q->r)->(p->r))
1. |- (p->q) ; HYP [1]
2. |- ((q->r)->(p->r)) ; Sf [1] {chi:=r}
)"},
    {"th3-v-1", "p |- p->(0->0)",
     R"(hyp |- p
goal |- (p->(0->0))
1. |- (0->0) ; B2
2. |- ((0->0)->(p->(0->0))) ; B1 {phi:=(0->0), psi:=p}
3. |- (p->(0->0)) ; MP [1,2]
)"},
    {"th3-v-2", "p |- (0->0)->p",
     R"(hyp |- p
goal |- ((0->0)->p)
1. |- (p->((0->0)->p)) ; B1 {phi:=p, psi:=(0->0)}
2. |- p ; HYP [1]
3. |- ((0->0)->p) ; MP [2,1]
)"},
    {"th3-v-3", "(0->0)->p |- p",
     R"(hyp |- ((0->0)->p)
goal |- p
1. |- (0->0) ; B2
2. |- ((0->0)->p) ; HYP [1]
3. |- p ; MP [1,2]
)"},
};

inline std::span<const Fixture> fixtures() { return kFixtures; }

inline const Fixture* find_fixture(std::string_view id) {
  for (const auto& f : kFixtures)
    if (f.id == id) return &f;
  return nullptr;
}

} // namespace omplab
