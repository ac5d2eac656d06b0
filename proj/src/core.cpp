#include "ccav/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace ccav {

std::vector<int> PreferenceOrder::positions() const {
    std::vector<int> pos(ranking.size(), -1);
    for (int r = 0; r < size(); ++r) pos[ranking[r]] = r;
    return pos;
}

bool PreferenceOrder::prefers(int a, int b) const {
    for (int c : ranking) {
        if (c == a) return true;
        if (c == b) return false;
    }
    return false;
}

bool is_permutation_of(const std::vector<int>& ranking, int m) {
    if (static_cast<int>(ranking.size()) != m) return false;
    std::vector<char> seen(m, 0);
    for (int a : ranking) {
        if (a < 0 || a >= m || seen[a]) return false;
        seen[a] = 1;
    }
    return true;
}

void validate_election(const Election& election) {
    const int m = election.num_alternatives();
    if (m < 1) throw ValidationError("election must have at least one alternative");
    std::unordered_set<std::string> names(election.alternatives.begin(), election.alternatives.end());
    if (static_cast<int>(names.size()) != m)
        throw ValidationError("alternative ids are not distinct");
    std::unordered_set<std::string> ids;
    for (const Voter& v : election.voters) {
        if (!ids.insert(v.id).second)
            throw ValidationError("duplicate voter id '" + v.id + "'");
        if (!is_permutation_of(v.order.ranking, m))
            throw ValidationError("order of voter '" + v.id + "' is not a permutation of the alternatives");
    }
}

ScoreTable plurality_scores(const Election& election) {
    ScoreTable scores(election.num_alternatives(), 0);
    for (const Voter& v : election.voters) ++scores[v.order.top()];
    return scores;
}

std::vector<int> plurality_winners(const Election& election) {
    const ScoreTable scores = plurality_scores(election);
    const long long best = *std::max_element(scores.begin(), scores.end());
    std::vector<int> winners;
    for (int a = 0; a < election.num_alternatives(); ++a)
        if (scores[a] == best) winners.push_back(a);
    return winners;
}

PairwiseMatrix pairwise_matrix(const Election& election) {
    const int m = election.num_alternatives();
    PairwiseMatrix mat;
    mat.m = m;
    mat.counts.assign(static_cast<size_t>(m) * m, 0);
    for (const Voter& v : election.voters) {
        const std::vector<int>& r = v.order.ranking;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                ++mat.at(r[i], r[j]);
    }
    return mat;
}

std::optional<int> condorcet_winner(const Election& election) {
    if (election.voters.empty()) return std::nullopt;
    const PairwiseMatrix mat = pairwise_matrix(election);
    const int m = election.num_alternatives();
    for (int c = 0; c < m; ++c) {
        bool wins_all = true;
        for (int a = 0; a < m && wins_all; ++a)
            if (a != c && mat.at(c, a) <= mat.at(a, c)) wins_all = false;
        if (wins_all) return c;
    }
    return std::nullopt;
}

int swap_distance(const PreferenceOrder& a, const PreferenceOrder& b) {
    if (a.size() != b.size())
        throw ValidationError("swap_distance: orders are over different alternative sets");
    const std::vector<int> pos_b = b.positions();
    const int m = a.size();
    int inversions = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (pos_b[a.ranking[i]] > pos_b[a.ranking[j]]) ++inversions;
    return inversions;
}

} // namespace ccav
