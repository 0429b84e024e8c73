#pragma once

#include <string>
#include <vector>

#include "boardmagic/board.hpp"
#include "boardmagic/blocks.hpp"

namespace boardmagic {

/// Three {0,1,2}-valued p x p matrices whose rows and columns all sum to p
/// and whose cellwise values partition {0,1,2}, plus a p x p magic square.
/// The offset designs for (p,p,p)-boards with odd p are built from these.
struct CirculantTriple {
    int p = 0;
    IntMatrix a;
    IntMatrix b;
    IntMatrix c;
    IntMatrix square;
};

/// Empty when the triple satisfies all of its invariants.
std::vector<std::string> verify_triple(const CirculantTriple& t);

/// p odd >= 3; throws std::invalid_argument for even p.
CirculantTriple circulant_triple(int p);

// --- family builders (boards given in their natural orientation) ---------

/// (1,1,r) tri-magic ladder layout.
Design ladder_design(int r);
/// (1,1,r) bi-magic, r % 4 != 1.
Design ladder_split_design(int r);
/// (1,q,r) with q >= 2, q = r (mod 2): tri-magic for q < r, bi-magic for
/// q = r. Built by trimming the corner row/column off a pinned rectangle.
Design corner_trim_design(int q, int r);
/// (1, 2s+1, 2k) tri-magic stack of strip blocks, k > s >= 1. The translated
/// variant shifts the strip labels down and the short column up.
Design stacked_design(int s, int k, bool translated = false);
/// (1, 2s, 2k-1) tri-magic block product, k > s >= 2.
Design block_product_design(int s, int k);
/// (1, 2, r) tri-magic for odd r >= 3.
Design two_row_family_design(int r);
/// (2, 2, r) tri-magic for r >= 2.
Design two_two_design(int r);
/// (2, 2, r) bi-magic for even r >= 2.
Design two_two_even_bi_design(int r);

/// (p,q,r) tri-magic, p,q odd, 3 <= p < q, r even: one rectangle over the
/// merged P+Q rows, one over PQ.
Design merge_pq_design(int p, int q, int r);
/// (p,q,r) tri-magic, p,r odd, q even, 3 <= p < q < r.
Design merge_pr_design(int p, int q, int r);
/// (p,q,r) tri-magic, p even, q,r odd, 2 <= p < q < r.
Design merge_qr_design(int p, int q, int r);
/// (p,q,r) same parity, 2 <= p <= q <= r, (p,q) != (2,2): three rectangles.
/// variant selects which interval order is used (0 or 1).
Design three_rect_design(int p, int q, int r, int variant);

/// (p,p,p) bi-magic for even p >= 2.
Design block_squares_bi_design(int p);
/// (p,p,p) bi-magic for odd p >= 3.
Design circulant_bi_design(int p);
/// (p,p,r) bi-magic: p x p square plus a 2p x r rectangle, p >= 3, r even.
Design square_merged_rect_design(int p, int r);

/// (p,p,p) magic for even p >= 2.
Design block_squares_magic_design(int p);
/// (p,p,p) magic for odd p >= 3.
Design circulant_magic_design(int p);

// --- fixtures -------------------------------------------------------------

/// Small hand-made designs kept for regression and as settled one-off cases.
/// Unknown names throw std::invalid_argument.
Design fixture(const std::string& name);
std::vector<std::string> fixture_names();

// --- dispatch ---------------------------------------------------------------

/// How a (board, class) request resolves against the implemented catalog.
struct Coverage {
    enum class Kind { covered, impossible, open };
    Kind kind = Kind::open;
    std::string rule;       // construction or nonexistence rule id
    std::string statement;  // one-line description
};

Coverage probe(MagicClass cls, const Board& b);

/// Build a verified design of the requested class, or throw ConstructError
/// (proven_impossible / not_covered). Boards are canonicalized to ascending
/// dimensions internally and the result is permuted back.
Design construct_tri(const Board& b);
Design construct_bi(const Board& b);
Design construct_magic(const Board& b);
Design construct(MagicClass cls, const Board& b);

}  // namespace boardmagic
