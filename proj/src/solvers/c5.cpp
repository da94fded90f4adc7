#include "hfree/solvers.hpp"

namespace hfree {

void require_free(const Graph& g, const Family& f, const std::string& what) {
    if (auto hit = find_family_member(g, f))
        throw PromiseViolation(what + " contains " + to_string(hit->id), *hit);
}

Verdict solve_c5col_h3free(const Graph& g, Promise mode) {
    if (mode == Promise::Verify) require_free(g, family_of({PatternId::h(3)}), "input");
    Verdict v;
    static const PatternId fixed[] = {PatternId::complete(3), PatternId::of(PatternKind::E1),
                                      PatternId::of(PatternKind::E2), PatternId::of(PatternKind::E3)};
    for (const auto& id : fixed)
        if (auto e = contains_subgraph(g, id)) {
            v.witness = FamilyHit{id, *e};
            return v;
        }
    if (auto fl = detect_odd_flower(g)) {
        v.witness = FamilyHit{PatternId::flower(fl->petals), fl->emb};
        return v;
    }
    v.yes = true;
    return v;
}

}  // namespace hfree
