#pragma once

#include <set>
#include <vector>

#include "cnspectra/connectivity.hpp"
#include "cnspectra/recognition.hpp"
#include "cnspectra/spectrum.hpp"

namespace cns {

/// The quantities a classification decision was based on.
struct Evidence {
    int p = 0;
    int q = 0;
    int delta = 0;
    int l = 0;
    ConnectivityClass connectivity = ConnectivityClass::Disconnected;
    bool planar = false;
    bool outerplanar = false;
    FamilyLabel family;
};

Evidence gather_evidence(const Graph& g);

// ---- A_n for one n >= 3 ------------------------------------------------

enum class AnBranch {
    K4,              // {1}: n = 3 and G = K_4
    TException,      // {1,2}: n = 3 and G in the T class (m >= 3) or S_5, S_7
    QClass,          // {0,2}: G in Q_m with m <= n <= Delta
    TooFewVertices,  // {}: p < n
    LowMaxDegree,    // {0}: Delta < n
    HasK2n,          // {0,1,2}: n <= L
    Generic,         // {0,1}
};

struct AnClassification {
    AnBranch branch;
    Spectrum predicted;
    Evidence evidence;
};

/// Requires a planar graph and n >= 3; throws DomainError / InputError.
AnClassification predict_an(const Graph& g, int n);

// ---- The whole profile A_3..A_p ----------------------------------------

enum class ProfileBranch { K4, S5, S7, TClass, QClass, Generic };

struct ProfileClassification {
    ProfileBranch branch;
    std::vector<Spectrum> predicted;  // entries n = 3..p in order
    Evidence evidence;
};

/// Requires a planar graph.
ProfileClassification predict_profile(const Graph& g);

// ---- A_2 rows for planar connected graphs -------------------------------

enum class A2Row {
    Empty,            // K_1
    Zero,             // K_2
    Two,              // K_4
    TwoThree,         // T_3, S_3
    TwoFour,          // B_4, T'_4
    TwoEvenEll,       // T'_l, even l >= 6
    TwoThreeFour,     // T_4, S_5, S_6, S_7, S_8, S_9
    TwoThreeEll,      // B_l or T-class on l besides T'_l, l >= 5
    ZeroTwo,          // square, cube, icosahedron
    ZeroTwoThree,     // S_4, K_{2,3}, S'
    ZeroTwoAPrime,    // infinitely many per A' != {}, {3}
    One,              // D_l
    ZeroOne,          // no 4-cycles, not D_l / K_1 / K_2
    OneTwoAPrime,     // infinitely many per A'
    ZeroOneTwoAPrime, // infinitely many per A'
    Unclassified,     // value set outside the table (impossible for valid input)
};

struct A2Classification {
    A2Row row = A2Row::Unclassified;
    std::set<int> a2;
    FamilyLabel member;       // identified member (finite rows)
    bool member_verified = false;
    Evidence evidence;
};

/// Requires a planar connected graph.
A2Classification classify_a2(const Graph& g);

// ---- A_2 rows for outerplanar connected graphs --------------------------

enum class OuterA2Row { Empty, Zero, One, ZeroOne, ZeroTwo, OneTwo, ZeroOneTwo, Unclassified };

struct OuterA2Classification {
    OuterA2Row row = OuterA2Row::Unclassified;
    std::set<int> a2;
    FamilyLabel member;
    bool member_verified = false;
    Evidence evidence;
};

/// Requires an outerplanar connected graph.
OuterA2Classification classify_outerplanar_a2(const Graph& g);

/// Convenience for disconnected inputs: classify every connected component
/// and assemble A_2 by the disjoint-union rule ({0} joins in once there are
/// two or more components, or a component smaller than the tuple).
std::set<int> a2_by_components(const Graph& g);

const char* to_string(AnBranch b);
const char* to_string(ProfileBranch b);
const char* to_string(A2Row r);
const char* to_string(OuterA2Row r);

}  // namespace cns
