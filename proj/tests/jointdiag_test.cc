// Copyright 2026 The sepdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sepdec/jointdiag.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "sepdec/random.h"

using namespace sepdec;
using oracle::diag;
using oracle::unit;

namespace {

BlockGrid bell_grid() {
    BlockGrid grid(2, 2);
    for (size_t i = 0; i < 2; i++)
        for (size_t j = 0; j < 2; j++)
            grid.at(i, j) = 0.5 * unit(2, i, j);
    return grid;
}

struct Partition {
    std::vector<ComplexMatrix> projections;
    std::vector<ComplexMatrix> tuples;
    BlockGrid grid;
};

/// Blocks sum_g tuples[g](i, j) Q_g for a random orthogonal partition of a
/// random subspace of C^n into q pieces.
Partition random_partition(size_t m, size_t n, size_t q, uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix u = random_unitary(n, rng);
    std::vector<size_t> sizes(q, 1);
    size_t used = q;
    size_t extra = rng.index(n - q + 1);
    for (size_t k = 0; k < extra; k++) {
        sizes[rng.index(q)]++;
        used++;
    }
    Partition p{{}, {}, BlockGrid(m, n)};
    size_t col = 0;
    for (size_t g = 0; g < q; g++) {
        ComplexMatrix basis = u.middleCols(col, sizes[g]);
        col += sizes[g];
        p.projections.push_back(basis * basis.adjoint());
        ComplexMatrix tuple(m, m);
        for (size_t i = 0; i < m; i++)
            for (size_t j = 0; j < m; j++)
                tuple(i, j) = rng.complex_normal();
        p.tuples.push_back(tuple);
    }
    for (size_t i = 0; i < m; i++)
        for (size_t j = 0; j < m; j++) {
            ComplexMatrix b = ComplexMatrix::Zero(n, n);
            for (size_t g = 0; g < q; g++)
                b += p.tuples[g](i, j) * p.projections[g];
            p.grid.at(i, j) = b;
        }
    EXPECT_LE(used, n);
    return p;
}

}  // namespace

TEST(family_check, bell_grid_names_offending_block) {
    FamilyCheck check = is_commuting_normal_family(bell_grid());
    EXPECT_FALSE(check.ok);
    EXPECT_EQ(check.diagnostics.defect, FamilyDefect::NonNormal);
    EXPECT_EQ(check.diagnostics.first, (BlockIndex{1, 2}));
    EXPECT_NE(check.diagnostics.describe().find("(1,2)"), std::string::npos);
}

TEST(family_check, diagonal_blocks_pass) {
    BlockGrid grid(2, 3);
    Rng rng(1);
    for (size_t i = 0; i < 2; i++)
        for (size_t j = 0; j < 2; j++)
            grid.at(i, j) = random_ginibre(3, 1, rng).asDiagonal();
    EXPECT_TRUE(is_commuting_normal_family(grid).ok);
}

TEST(family_check, functions_of_one_hermitian_pass) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Rng rng(seed);
        ComplexMatrix h = random_hermitian(4, rng);
        BlockGrid grid(2, 4);
        grid.at(0, 0) = h;
        grid.at(0, 1) = h * h + Complex(0, 1) * h;
        grid.at(1, 0) = grid.at(0, 1).adjoint();
        grid.at(1, 1) = h * h * h;
        EXPECT_TRUE(is_commuting_normal_family(grid).ok);
    }
}

TEST(family_check, non_commuting_pair_is_reported) {
    BlockGrid grid(2, 2);
    grid.at(0, 0) = diag({1, 0});
    grid.at(1, 1) = oracle::line(oracle::vec({1, 1}));
    FamilyCheck check = is_commuting_normal_family(grid);
    EXPECT_FALSE(check.ok);
    EXPECT_EQ(check.diagnostics.defect, FamilyDefect::NonCommuting);
    EXPECT_EQ(check.diagnostics.first, (BlockIndex{1, 1}));
    EXPECT_EQ(check.diagnostics.second, (BlockIndex{2, 2}));
    EXPECT_GT(check.diagnostics.relative_defect, 1);
}

TEST(family_check, noise_level_blocks_are_ignored) {
    BlockGrid grid(2, 2);
    grid.at(0, 0) = diag({1, 2});
    grid.at(0, 1) = unit(2, 0, 1) * 1e-13;
    grid.at(1, 0) = unit(2, 1, 0) * 1e-13;
    EXPECT_TRUE(is_commuting_normal_family(grid).ok);
    EXPECT_FALSE(commutes(grid.at(0, 0), grid.at(0, 1)));
}

TEST(joint_eigenspaces, diagonal_example) {
    BlockGrid grid(2, 2);
    grid.at(0, 0) = diag({1, 0});
    grid.at(1, 1) = diag({0, 1});
    JointEigenstructure js = joint_eigenspaces(grid);
    ASSERT_EQ(js.size(), 2u);
    // Sorted by tuple: E_22 = (0,0;0,1) precedes E_11 = (1,0;0,0).
    EXPECT_LT((js.projections[0] - diag({0, 1})).norm(), 1e-14);
    EXPECT_LT((js.tuples[0] - unit(2, 1, 1)).norm(), 1e-14);
    EXPECT_LT((js.projections[1] - diag({1, 0})).norm(), 1e-14);
    EXPECT_LT((js.tuples[1] - unit(2, 0, 0)).norm(), 1e-14);
    EXPECT_LT((js.support - ComplexMatrix::Identity(2, 2)).norm(), 1e-14);
}

TEST(joint_eigenspaces, scalar_blocks_give_one_space) {
    BlockGrid grid(2, 3);
    ComplexMatrix c(2, 2);
    c << 1, Complex(0.5, 0.25), Complex(0.5, -0.25), 2;
    for (size_t i = 0; i < 2; i++)
        for (size_t j = 0; j < 2; j++)
            grid.at(i, j) = c(i, j) * ComplexMatrix::Identity(3, 3);
    JointEigenstructure js = joint_eigenspaces(grid);
    ASSERT_EQ(js.size(), 1u);
    EXPECT_LT((js.projections[0] - ComplexMatrix::Identity(3, 3)).norm(), 1e-13);
    EXPECT_LT((js.tuples[0] - c).norm(), 1e-13);
}

TEST(joint_eigenspaces, zero_eigenspace_is_excluded) {
    BlockGrid grid(1, 3);
    grid.at(0, 0) = diag({2, 0, 0});
    JointEigenstructure js = joint_eigenspaces(grid);
    ASSERT_EQ(js.size(), 1u);
    EXPECT_LT((js.support - diag({1, 0, 0})).norm(), 1e-14);
}

TEST(joint_eigenspaces, recovers_random_partitions) {
    for (uint64_t seed = 0; seed < 40; seed++) {
        size_t m = 1 + seed % 3;
        size_t n = 2 + seed % 5;
        size_t q = 1 + seed % std::min<size_t>(n, 4);
        Partition p = random_partition(m, n, q, seed);
        JointEigenstructure js = joint_eigenspaces(p.grid);
        ASSERT_EQ(js.size(), q) << "seed " << seed;
        for (size_t g = 0; g < q; g++) {
            size_t match = q;
            for (size_t h = 0; h < q; h++) {
                if ((js.tuples[g] - p.tuples[h]).norm() < 1e-8) match = h;
            }
            ASSERT_LT(match, q) << "seed " << seed;
            EXPECT_LT((js.projections[g] - p.projections[match]).norm(), 1e-8);
            EXPECT_LT((js.bases[g].adjoint() * js.bases[g] - ComplexMatrix::Identity(js.bases[g].cols(), js.bases[g].cols())).norm(), 1e-12);
        }
        for (size_t g = 0; g + 1 < q; g++) {
            EXPECT_FALSE(lexicographic_less(js.tuples[g + 1], js.tuples[g], 1e-9));
        }
    }
}

TEST(joint_eigenspaces, rejects_non_commuting_family) {
    try {
        joint_eigenspaces(bell_grid());
        ADD_FAILURE();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCommutingFamily);
        ASSERT_TRUE(e.diagnostics().has_value());
        EXPECT_EQ(e.diagnostics()->first, (BlockIndex{1, 2}));
    }
}

TEST(joint_eigenspaces, gap_near_threshold_is_ambiguous) {
    BlockGrid grid(1, 2);
    grid.at(0, 0) = diag({1, 1 + 1e-7});
    try {
        joint_eigenspaces(grid);
        ADD_FAILURE();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ClusterAmbiguity);
    }
    grid.at(0, 0) = diag({1, 1 + 3e-7});
    EXPECT_THROW(joint_eigenspaces(grid), Error);
    grid.at(0, 0) = diag({1, 1 + 1e-12});
    EXPECT_EQ(joint_eigenspaces(grid).size(), 1u);
    grid.at(0, 0) = diag({1, 1 + 1e-4});
    EXPECT_EQ(joint_eigenspaces(grid).size(), 2u);
}

TEST(joint_eigenspaces, coincident_entry_in_one_block_is_not_ambiguous) {
    BlockGrid grid(2, 2);
    grid.at(0, 0) = diag({0.5, 0.5 + 1e-7});
    grid.at(1, 1) = diag({0.2, 0.9});
    JointEigenstructure js = joint_eigenspaces(grid);
    ASSERT_EQ(js.size(), 2u);
    EXPECT_LT((js.projections[0] - diag({1, 0})).norm(), 1e-14);
}

TEST(joint_eigenspaces, zero_family) {
    BlockGrid grid(2, 2);
    JointEigenstructure js = joint_eigenspaces(grid);
    EXPECT_EQ(js.size(), 0u);
}

TEST(lexicographic_less, semantics) {
    ComplexMatrix a = diag({1, 2});
    ComplexMatrix b = diag({1, 3});
    EXPECT_TRUE(lexicographic_less(a, b, 1e-9));
    EXPECT_FALSE(lexicographic_less(b, a, 1e-9));
    EXPECT_FALSE(lexicographic_less(a, a, 1e-9));
    ComplexMatrix c = a;
    c(0, 0) += 1e-12;
    EXPECT_TRUE(lexicographic_less(c, b, 1e-9));
    EXPECT_FALSE(lexicographic_less(a, c, 1e-9));
    ComplexMatrix d = a;
    d(0, 0) = Complex(1, -1);
    EXPECT_TRUE(lexicographic_less(d, a, 1e-9));
}
