#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>

#include "helpers.hpp"

using namespace ccav;
using test_helpers::election;
using test_helpers::order;

TEST_CASE("plurality scores count top positions") {
    CHECK(plurality_scores(election(2, {})) == ScoreTable{0, 0});
    // tops a, a, b over {a, b, c}
    const Election e = election(3, {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}});
    CHECK(plurality_scores(e) == ScoreTable{2, 1, 0});
    const ScoreTable s = plurality_scores(e);
    long long sum = 0;
    for (long long v : s) sum += v;
    CHECK(sum == e.num_voters());
}

TEST_CASE("plurality winners are the argmax set") {
    CHECK(plurality_winners(election(2, {})) == std::vector<int>{0, 1});
    CHECK(plurality_winners(election(2, {{0, 1}, {0, 1}, {1, 0}, {1, 0}})) == std::vector<int>{0, 1});
    CHECK(plurality_winners(election(2, {{0, 1}, {0, 1}, {1, 0}})) == std::vector<int>{0});
}

TEST_CASE("pairwise matrix") {
    const Election one = election(3, {{0, 1, 2}});
    const PairwiseMatrix m1 = pairwise_matrix(one);
    CHECK(m1.at(0, 1) == 1);
    CHECK(m1.at(0, 2) == 1);
    CHECK(m1.at(1, 2) == 1);
    CHECK(m1.at(1, 0) == 0);
    CHECK(m1.at(2, 0) == 0);
    CHECK(m1.at(2, 1) == 0);

    const PairwiseMatrix m2 = pairwise_matrix(election(2, {{0, 1}, {1, 0}}));
    CHECK(m2.at(0, 1) == 1);
    CHECK(m2.at(1, 0) == 1);

    // cyclic profile a>b>c, b>c>a, c>a>b
    const Election cyc = election(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    const PairwiseMatrix mc = pairwise_matrix(cyc);
    CHECK(mc.at(0, 1) == 2);
    CHECK(mc.at(1, 2) == 2);
    CHECK(mc.at(2, 0) == 2);
}

TEST_CASE("pairwise complement invariant on random elections") {
    Rng rng(1001);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + rng.uniform(4);
        std::vector<std::vector<int>> rankings;
        const int n = rng.uniform(7);
        for (int i = 0; i < n; ++i) rankings.push_back(test_helpers::random_order(rng, m).ranking);
        const Election e = election(m, rankings);
        const PairwiseMatrix mat = pairwise_matrix(e);
        for (int a = 0; a < m; ++a) {
            CHECK(mat.at(a, a) == 0);
            for (int b = a + 1; b < m; ++b) CHECK(mat.at(a, b) + mat.at(b, a) == n);
        }
    }
}

TEST_CASE("condorcet winner") {
    CHECK(condorcet_winner(election(3, {{0, 1, 2}})) == 0);
    CHECK_FALSE(condorcet_winner(election(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})).has_value());
    CHECK_FALSE(condorcet_winner(election(2, {{0, 1}, {1, 0}})).has_value());
    CHECK_FALSE(condorcet_winner(election(3, {})).has_value());
    // zero voters never produce a winner, even with a single alternative
    CHECK_FALSE(condorcet_winner(election(1, {})).has_value());
    CHECK(condorcet_winner(election(1, {{0}})) == 0);
}

TEST_CASE("condorcet winner agrees with a recount from the matrix") {
    Rng rng(1002);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 1 + rng.uniform(4);
        std::vector<std::vector<int>> rankings;
        const int n = rng.uniform(8);
        for (int i = 0; i < n; ++i) rankings.push_back(test_helpers::random_order(rng, m).ranking);
        const Election e = election(m, rankings);
        const auto winner = condorcet_winner(e);
        const PairwiseMatrix mat = pairwise_matrix(e);
        for (int c = 0; c < m; ++c) {
            bool beats_all = n > 0;
            for (int a = 0; a < m; ++a)
                if (a != c && mat.at(c, a) <= mat.at(a, c)) beats_all = false;
            CHECK(beats_all == (winner.has_value() && *winner == c));
        }
    }
}

TEST_CASE("swap distance basics") {
    CHECK(swap_distance(order({0, 1, 2}), order({0, 1, 2})) == 0);
    CHECK(swap_distance(order({0, 1, 2}), order({2, 1, 0})) == 3);
    CHECK(swap_distance(order({0, 1}), order({1, 0})) == 1);
    CHECK_THROWS_AS(swap_distance(order({0, 1}), order({0, 1, 2})), ValidationError);
}

namespace {

// Independent oracle: BFS over the adjacent-transposition graph of all
// permutations.
int bfs_swap_distance(const std::vector<int>& from, const std::vector<int>& to) {
    std::map<std::vector<int>, int> dist{{from, 0}};
    std::queue<std::vector<int>> queue;
    queue.push(from);
    while (!queue.empty()) {
        const std::vector<int> cur = queue.front();
        queue.pop();
        if (cur == to) return dist[cur];
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            std::vector<int> next = cur;
            std::swap(next[i], next[i + 1]);
            if (dist.emplace(next, dist[cur] + 1).second) queue.push(next);
        }
    }
    return -1;
}

} // namespace

TEST_CASE("swap distance equals the shortest adjacent-transposition path (m <= 4)") {
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> base(m);
        for (int i = 0; i < m; ++i) base[i] = i;
        std::vector<std::vector<int>> perms;
        std::vector<int> p = base;
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        for (const auto& a : perms)
            for (const auto& b : perms)
                CHECK(swap_distance(order(a), order(b)) == bfs_swap_distance(a, b));
    }
}

TEST_CASE("swap distance is a metric on random triples") {
    Rng rng(1003);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + rng.uniform(5);
        const PreferenceOrder a = test_helpers::random_order(rng, m);
        const PreferenceOrder b = test_helpers::random_order(rng, m);
        const PreferenceOrder c = test_helpers::random_order(rng, m);
        CHECK(swap_distance(a, b) == swap_distance(b, a));
        CHECK((swap_distance(a, b) == 0) == (a == b));
        CHECK(swap_distance(a, c) <= swap_distance(a, b) + swap_distance(b, c));
    }
}

TEST_CASE("election validation") {
    Election dup = election(2, {{0, 1}, {1, 0}});
    dup.voters[1].id = dup.voters[0].id;
    CHECK_THROWS_AS(validate_election(dup), ValidationError);

    Election bad = election(3, {{0, 1, 2}});
    bad.voters[0].order.ranking = {0, 1, 1};
    CHECK_THROWS_AS(validate_election(bad), ValidationError);
}
