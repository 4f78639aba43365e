#include "cnspectra/classifier.hpp"

#include <algorithm>

#include "cnspectra/brute.hpp"
#include "cnspectra/canonical.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/families.hpp"

namespace cns {

namespace {

std::set<int> set_of(std::initializer_list<int> xs) { return std::set<int>(xs); }

bool is_k4(const Graph& g) { return g.order() == 4 && g.size() == 6; }

bool is_s_graph(const Graph& g, int k) {
    return certificate(g).g6 == s_graph_g6(k);
}

}  // namespace

Evidence gather_evidence(const Graph& g) {
    Evidence e;
    e.p = g.order();
    e.q = g.size();
    e.delta = g.max_degree();
    e.l = l_value(g);
    e.connectivity = g.order() >= 1 ? connectivity_class(g) : ConnectivityClass::Disconnected;
    e.planar = is_planar(g);
    e.outerplanar = is_outerplanar(g);
    e.family = recognize_family(g);
    return e;
}

AnClassification predict_an(const Graph& g, int n) {
    if (n < 3) throw InputError("predict_an: n must be at least 3");
    if (!is_planar(g)) throw DomainError("predict_an: the classification needs a planar graph");

    AnClassification out;
    out.evidence = gather_evidence(g);
    out.predicted.n = n;
    const int p = out.evidence.p;
    const int delta = out.evidence.delta;

    // Cases in the fixed order of the classification; they overlap textually,
    // so the order is semantic.
    if (n == 3 && is_k4(g)) {
        out.branch = AnBranch::K4;
        out.predicted.values = set_of({1});
        return out;
    }
    if (n == 3) {
        auto t = recognize_T(g);
        bool exceptional = (t && t->m >= 3) ||
                           (p == 7 && is_s_graph(g, 5)) ||
                           (p == 8 && is_s_graph(g, 7));
        if (exceptional) {
            out.branch = AnBranch::TException;
            out.predicted.values = set_of({1, 2});
            return out;
        }
    }
    if (auto m = recognize_Q(g); m && *m <= n && n <= delta) {
        out.branch = AnBranch::QClass;
        out.predicted.values = set_of({0, 2});
        return out;
    }
    if (p < n) {
        out.branch = AnBranch::TooFewVertices;
        return out;
    }
    if (delta < n) {
        out.branch = AnBranch::LowMaxDegree;
        out.predicted.values = set_of({0});
        return out;
    }
    if (n <= out.evidence.l) {  // G contains K_{2,n}
        out.branch = AnBranch::HasK2n;
        out.predicted.values = set_of({0, 1, 2});
        return out;
    }
    out.branch = AnBranch::Generic;
    out.predicted.values = set_of({0, 1});
    return out;
}

ProfileClassification predict_profile(const Graph& g) {
    if (!is_planar(g)) throw DomainError("predict_profile: the classification needs a planar graph");

    ProfileClassification out;
    out.evidence = gather_evidence(g);
    const int p = out.evidence.p;
    const int delta = out.evidence.delta;
    const int l = out.evidence.l;

    auto push = [&](int n, std::set<int> values) {
        Spectrum s;
        s.n = n;
        s.values = std::move(values);
        out.predicted.push_back(std::move(s));
    };

    if (is_k4(g)) {
        out.branch = ProfileBranch::K4;
        push(3, set_of({1}));
        push(4, set_of({0}));
        return out;
    }
    if (p == 7 && is_s_graph(g, 5)) {
        out.branch = ProfileBranch::S5;
        push(3, set_of({1, 2}));
        push(4, set_of({0, 1, 2}));
        push(5, set_of({0, 1}));
        push(6, set_of({0, 1}));
        push(7, set_of({0}));
        return out;
    }
    if (p == 8 && is_s_graph(g, 7)) {
        out.branch = ProfileBranch::S7;
        push(3, set_of({1, 2}));
        push(4, set_of({0, 1, 2}));
        push(5, set_of({0, 1}));
        push(6, set_of({0, 1}));
        push(7, set_of({0}));
        push(8, set_of({0}));
        return out;
    }
    if (auto t = recognize_T(g); t && t->m >= 3) {
        out.branch = ProfileBranch::TClass;
        const int m = t->m;  // p = m + 2
        push(3, set_of({1, 2}));
        for (int n = 4; n <= m; ++n) push(n, set_of({0, 1, 2}));
        push(m + 1, set_of({0, 1}));
        push(m + 2, set_of({0}));
        return out;
    }
    if (auto q = recognize_Q(g)) {
        out.branch = ProfileBranch::QClass;
        for (int n = 3; n <= p; ++n) {
            if (n <= *q - 1)
                push(n, set_of({0, 1, 2}));
            else if (n <= delta)
                push(n, set_of({0, 2}));
            else
                push(n, set_of({0}));
        }
        return out;
    }
    out.branch = ProfileBranch::Generic;
    for (int n = 3; n <= p; ++n) {
        if (n <= l)
            push(n, set_of({0, 1, 2}));
        else if (n <= delta)
            push(n, set_of({0, 1}));
        else
            push(n, set_of({0}));
    }
    return out;
}

namespace {

// Identified member must be one of the allowed labels for its finite row.
bool member_matches(const FamilyLabel& got, std::initializer_list<FamilyLabel> allowed) {
    return std::find(allowed.begin(), allowed.end(), got) != allowed.end();
}

}  // namespace

A2Classification classify_a2(const Graph& g) {
    if (!is_planar(g)) throw DomainError("classify_a2: the classification needs a planar graph");
    if (!is_connected(g)) throw DomainError("classify_a2: the table covers connected graphs");

    A2Classification out;
    out.evidence = gather_evidence(g);
    out.a2 = a_set(g, 2).values;
    out.member = out.evidence.family;
    const std::set<int>& a2 = out.a2;
    const auto& fam = out.member;
    using Kind = FamilyLabel::Kind;
    const int p = g.order();

    auto rest_above = [&](std::set<int> base) {
        std::set<int> rest;
        for (int v : a2)
            if (!base.count(v)) rest.insert(v);
        return rest;
    };

    if (a2.empty()) {
        out.row = A2Row::Empty;
        out.member_verified = (p == 1);
        return out;
    }
    if (a2 == set_of({0})) {
        out.row = A2Row::Zero;
        out.member_verified = (p == 2 && g.size() == 1);
        return out;
    }
    const bool has0 = a2.count(0), has1 = a2.count(1), has2 = a2.count(2);

    if (has1 && has2) {
        out.row = has0 ? A2Row::ZeroOneTwoAPrime : A2Row::OneTwoAPrime;
        out.member_verified = true;  // infinite rows carry no member claim
        return out;
    }
    if (has1) {
        if (a2 == set_of({1})) {
            out.row = A2Row::One;
            out.member_verified = fam.kind == Kind::D && p == 2 * fam.param + 1;
            return out;
        }
        if (a2 == set_of({0, 1})) {
            out.row = A2Row::ZeroOne;
            out.member_verified = !has_four_cycle(g) && fam.kind != Kind::D && p > 2;
            return out;
        }
        out.row = A2Row::Unclassified;  // 1 with a value >= 3 but no 2
        return out;
    }
    if (!has2) {
        out.row = A2Row::Unclassified;  // some value >= 3 but no 2
        return out;
    }

    if (has0) {
        std::set<int> rest = rest_above({0, 2});
        if (rest.empty()) {
            out.row = A2Row::ZeroTwo;
            out.member_verified = member_matches(
                fam, {FamilyLabel{Kind::Cycle, 4}, FamilyLabel{Kind::Cube, 0}, FamilyLabel{Kind::Icosahedron, 0}});
            return out;
        }
        if (rest == set_of({3})) {
            out.row = A2Row::ZeroTwoThree;
            out.member_verified = member_matches(
                fam, {FamilyLabel{Kind::S, 4}, FamilyLabel{Kind::K2l, 3}, FamilyLabel{Kind::Sprime, 0}});
            return out;
        }
        out.row = A2Row::ZeroTwoAPrime;
        out.member_verified = true;
        return out;
    }

    std::set<int> rest = rest_above({2});
    if (rest.empty()) {
        out.row = A2Row::Two;
        out.member_verified = fam == FamilyLabel{Kind::T, 2};
        return out;
    }
    if (rest == set_of({3})) {
        out.row = A2Row::TwoThree;
        out.member_verified = member_matches(fam, {FamilyLabel{Kind::T, 3}, FamilyLabel{Kind::S, 3}});
        return out;
    }
    if (rest == set_of({4})) {
        out.row = A2Row::TwoFour;
        out.member_verified = member_matches(fam, {FamilyLabel{Kind::B, 4}, FamilyLabel{Kind::Tprime, 4}});
        return out;
    }
    if (rest.size() == 1) {
        int ell = *rest.begin();
        if (ell >= 6 && ell % 2 == 0) {
            out.row = A2Row::TwoEvenEll;
            out.member_verified = fam == FamilyLabel{Kind::Tprime, ell};
            return out;
        }
        out.row = A2Row::Unclassified;
        return out;
    }
    if (rest == set_of({3, 4})) {
        out.row = A2Row::TwoThreeFour;
        out.member_verified =
            fam == FamilyLabel{Kind::T, 4} ||
            (fam.kind == Kind::S && fam.param >= 5 && fam.param <= 9);
        return out;
    }
    if (rest.size() == 2 && *rest.begin() == 3 && *rest.rbegin() >= 5) {
        int ell = *rest.rbegin();
        out.row = A2Row::TwoThreeEll;
        out.member_verified =
            fam == FamilyLabel{Kind::B, ell} ||
            ((fam.kind == Kind::T || fam.kind == Kind::Tclass) && fam.param == ell);
        return out;
    }
    out.row = A2Row::Unclassified;
    return out;
}

OuterA2Classification classify_outerplanar_a2(const Graph& g) {
    if (!is_outerplanar(g)) throw DomainError("classify_outerplanar_a2: needs an outerplanar graph");
    if (!is_connected(g)) throw DomainError("classify_outerplanar_a2: the table covers connected graphs");

    OuterA2Classification out;
    out.evidence = gather_evidence(g);
    out.a2 = a_set(g, 2).values;
    out.member = out.evidence.family;
    using Kind = FamilyLabel::Kind;
    const std::set<int>& a2 = out.a2;
    const int p = g.order();

    // Outerplanar graphs have no K_{2,3} subgraph, so A_2 never exceeds 2.
    if (!a2.empty() && *a2.rbegin() > 2) {
        out.row = OuterA2Row::Unclassified;
        return out;
    }
    if (a2.empty()) {
        out.row = OuterA2Row::Empty;
        out.member_verified = (p == 1);
    } else if (a2 == set_of({0})) {
        out.row = OuterA2Row::Zero;
        out.member_verified = (p == 2 && g.size() == 1);
    } else if (a2 == set_of({1})) {
        out.row = OuterA2Row::One;
        out.member_verified = out.member.kind == Kind::D;
    } else if (a2 == set_of({0, 1})) {
        out.row = OuterA2Row::ZeroOne;
        out.member_verified = !has_four_cycle(g) && out.member.kind != Kind::D && p > 2;
    } else if (a2 == set_of({0, 2})) {
        out.row = OuterA2Row::ZeroTwo;
        out.member_verified = out.member == FamilyLabel{Kind::Cycle, 4};
    } else if (a2 == set_of({1, 2})) {
        out.row = OuterA2Row::OneTwo;
        out.member_verified = recognize_R(g).has_value();
    } else {
        out.row = OuterA2Row::ZeroOneTwo;
        out.member_verified = true;
    }
    return out;
}

std::set<int> a2_by_components(const Graph& g) {
    std::vector<Graph> comps = connected_components(g);
    std::set<int> out;
    if (comps.size() >= 2) out.insert(0);
    for (const Graph& c : comps) {
        auto a2 = a_set(c, 2).values;  // empty for a part below 2 vertices
        out.insert(a2.begin(), a2.end());
    }
    return out;
}

const char* to_string(AnBranch b) {
    switch (b) {
        case AnBranch::K4: return "K4";
        case AnBranch::TException: return "T-or-S-exception";
        case AnBranch::QClass: return "Q-class";
        case AnBranch::TooFewVertices: return "too-few-vertices";
        case AnBranch::LowMaxDegree: return "max-degree-below-n";
        case AnBranch::HasK2n: return "contains-K2n";
        case AnBranch::Generic: return "generic";
    }
    return "?";
}

const char* to_string(ProfileBranch b) {
    switch (b) {
        case ProfileBranch::K4: return "K4";
        case ProfileBranch::S5: return "S5";
        case ProfileBranch::S7: return "S7";
        case ProfileBranch::TClass: return "T-class";
        case ProfileBranch::QClass: return "Q-class";
        case ProfileBranch::Generic: return "generic";
    }
    return "?";
}

const char* to_string(A2Row r) {
    switch (r) {
        case A2Row::Empty: return "{}";
        case A2Row::Zero: return "{0}";
        case A2Row::Two: return "{2}";
        case A2Row::TwoThree: return "{2,3}";
        case A2Row::TwoFour: return "{2,4}";
        case A2Row::TwoEvenEll: return "{2,l} even l>=6";
        case A2Row::TwoThreeFour: return "{2,3,4}";
        case A2Row::TwoThreeEll: return "{2,3,l} l>=5";
        case A2Row::ZeroTwo: return "{0,2}";
        case A2Row::ZeroTwoThree: return "{0,2,3}";
        case A2Row::ZeroTwoAPrime: return "{0,2}+A'";
        case A2Row::One: return "{1}";
        case A2Row::ZeroOne: return "{0,1}";
        case A2Row::OneTwoAPrime: return "{1,2}+A'";
        case A2Row::ZeroOneTwoAPrime: return "{0,1,2}+A'";
        case A2Row::Unclassified: return "unclassified";
    }
    return "?";
}

const char* to_string(OuterA2Row r) {
    switch (r) {
        case OuterA2Row::Empty: return "{}";
        case OuterA2Row::Zero: return "{0}";
        case OuterA2Row::One: return "{1}";
        case OuterA2Row::ZeroOne: return "{0,1}";
        case OuterA2Row::ZeroTwo: return "{0,2}";
        case OuterA2Row::OneTwo: return "{1,2}";
        case OuterA2Row::ZeroOneTwo: return "{0,1,2}";
        case OuterA2Row::Unclassified: return "unclassified";
    }
    return "?";
}

}  // namespace cns
