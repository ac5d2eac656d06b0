#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccav {

// Input data violates a documented invariant (bad instance, bad certificate).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solver or operation was called on an instance outside its structural
// precondition (e.g. not full-d, not single-crossing, not anonymous).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A linear order over the alternatives 0..m-1, most preferred first.
struct PreferenceOrder {
    std::vector<int> ranking;

    int size() const { return static_cast<int>(ranking.size()); }
    int top() const { return ranking.front(); }

    /// positions()[a] = rank of alternative a (0 = most preferred).
    std::vector<int> positions() const;

    bool prefers(int a, int b) const;

    bool operator==(const PreferenceOrder&) const = default;
};

struct Voter {
    std::string id;
    PreferenceOrder order;
};

/// An election (C, V): alternatives are dense indices, names are kept for I/O.
struct Election {
    std::vector<std::string> alternatives;
    std::vector<Voter> voters;

    int num_alternatives() const { return static_cast<int>(alternatives.size()); }
    int num_voters() const { return static_cast<int>(voters.size()); }
};

/// score[a] = number of voters ranking a first. Sums to the voter count.
using ScoreTable = std::vector<long long>;

/// n[a][b] = number of voters preferring a over b; n[a][b] + n[b][a] = |V| for a != b.
struct PairwiseMatrix {
    int m = 0;
    std::vector<long long> counts;

    long long at(int a, int b) const { return counts[static_cast<size_t>(a) * m + b]; }
    long long& at(int a, int b) { return counts[static_cast<size_t>(a) * m + b]; }
};

bool is_permutation_of(const std::vector<int>& ranking, int m);

/// Throws ValidationError on duplicate voter ids or rankings that are not
/// permutations of the alternative set.
void validate_election(const Election& election);

ScoreTable plurality_scores(const Election& election);

/// All argmax alternatives; with zero voters every alternative is tied at 0.
std::vector<int> plurality_winners(const Election& election);

PairwiseMatrix pairwise_matrix(const Election& election);

/// The unique alternative beating every other in strict pairwise majority,
/// or nullopt. Zero-voter elections never have a Condorcet winner.
std::optional<int> condorcet_winner(const Election& election);

/// Kendall-tau distance: the number of alternative pairs the two orders rank
/// oppositely. Equals the minimum number of adjacent swaps between them.
int swap_distance(const PreferenceOrder& a, const PreferenceOrder& b);

} // namespace ccav
