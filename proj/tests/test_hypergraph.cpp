#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hlc/canonical.hpp"
#include "hlc/embedding.hpp"
#include "hlc/hypergraph.hpp"
#include "oracle_graph.hpp"

using namespace hlc;

namespace {

Label lab(const char* s, std::size_t a) { return Label{s, a}; }

using G = Hypergraph<Label>;

std::vector<Label> small_alphabet() { return {lab("a", 2), lab("b", 2), lab("c", 1), lab("d", 3), lab("z", 0)}; }

}  // namespace

TEST_CASE("handle builds one edge over all external nodes") {
  auto h = handle(lab("p", 2));
  CHECK(h.node_count() == 2);
  CHECK(h.edge_count() == 1);
  CHECK(h.edge(0).att == std::vector<NodeId>{0, 1});
  CHECK(h.ext() == std::vector<NodeId>{0, 1});
  CHECK(is_handle(h));

  auto z = handle(lab("q", 0));
  CHECK(z.node_count() == 0);
  CHECK(z.edge_count() == 1);
  CHECK(z.type() == 0);
}

TEST_CASE("string graphs") {
  auto g = string_graph("ab");
  CHECK(g.node_count() == 3);
  CHECK(g.edge(0).att == std::vector<NodeId>{0, 1});
  CHECK(g.edge(1).label.sym == "b");
  CHECK(g.ext() == std::vector<NodeId>{0, 2});
  CHECK(isomorphic(string_graph("a"), handle(lab("a", 2))));
  CHECK_THROWS_AS(string_graph(""), Error);
  try {
    string_graph("");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyWord);
  }
  CHECK_THROWS_AS(string_graph(std::vector<Label>{lab("c", 1)}), Error);
}

TEST_CASE("malformed graphs are rejected") {
  G g(2);
  CHECK_THROWS_AS(g.add_edge(lab("a", 2), {0, 0}), Error);
  CHECK_THROWS_AS(g.add_edge(lab("a", 2), {0}), Error);
  CHECK_THROWS_AS(g.add_edge(lab("a", 2), {0, 5}), Error);
  CHECK_THROWS_AS(g.set_ext({1, 1}), Error);
}

TEST_CASE("replacement") {
  auto ab = string_graph("ab");
  auto r = replace(ab, 0, string_graph("cd"));
  CHECK(isomorphic(r, string_graph("cdb")));
  CHECK(oracle::brute_isomorphic(r, string_graph("cdb")));
  CHECK_THROWS_AS(replace(ab, 0, handle(lab("c", 1))), Error);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng, small_alphabet(), 5, 4, 2);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto h = replace(g, e, handle(g.edge(e).label));
      CHECK(isomorphic(h, g));
    }
    // handle(a)[G/e] is G
    auto filler = oracle::random_graph(rng, small_alphabet(), 5, 4, 2);
    auto back = replace(handle(lab("x", 2)), 0, filler);
    CHECK(isomorphic(back, filler));
  }
}

TEST_CASE("parallel replacement is order independent") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng, std::vector<Label>{lab("a", 2), lab("c", 1)}, 5, 4, 1);
    if (g.edge_count() < 2) continue;
    auto f1 = oracle::random_graph(rng, small_alphabet(), 4, 3, g.edge(0).att.size());
    auto f2 = oracle::random_graph(rng, small_alphabet(), 4, 3, g.edge(1).att.size());
    auto r1 = replace_edge(g, 0, f1);
    auto x = replace(r1.graph, r1.host_edges[1], f2);
    auto r2 = replace_edge(g, 1, f2);
    auto y = replace(r2.graph, r2.host_edges[0], f1);
    CHECK(isomorphic(x, y));
  }
}

TEST_CASE("compression") {
  auto abc = string_graph("abc");
  auto r = compress(abc, Subgraph{{1, 2}, {1}, {1, 2}}, lab("x", 2));
  CHECK(isomorphic(r, string_graph("axc")));

  // condition (a): node 2 touches the outside c-edge but is not in subExt
  CHECK_THROWS_AS(compress(abc, Subgraph{{1, 2}, {1}, {1}}, lab("x", 1)), Error);
  // condition (b): host-external node 0 internal to the subgraph
  try {
    compress(abc, Subgraph{{0, 1}, {0}, {1}}, lab("x", 1));
    FAIL("expected BoundaryViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundaryViolation);
  }
  CHECK_THROWS_AS(compress(abc, Subgraph{{1, 2}, {1}, {1, 2}}, lab("x", 3)), Error);
}

TEST_CASE("compression and replacement are opposite") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng, small_alphabet(), 5, 4, 2);
    if (g.edge_count() == 0) continue;
    EdgeId e = static_cast<EdgeId>(rng() % g.edge_count());
    auto h = oracle::random_graph(rng, small_alphabet(), 5, 4, g.edge(e).att.size());
    auto rr = replace_edge(g, e, h);
    Subgraph sub;
    for (NodeId v = 0; v < h.node_count(); ++v) sub.nodes.push_back(rr.filler_nodes[v]);
    for (EdgeId f = 0; f < h.edge_count(); ++f) sub.edges.push_back(rr.filler_edges[f]);
    for (NodeId v : h.ext()) sub.ext.push_back(rr.filler_nodes[v]);
    auto back = compress(rr.graph, sub, g.edge(e).label);
    CHECK(isomorphic(back, g));
    CHECK(rr.graph.edge_count() == g.edge_count() + h.edge_count() - 1);
    CHECK(rr.graph.type() == g.type());

    auto as_graph = subgraph_as_graph(rr.graph, sub);
    auto cr = compress_subgraph(rr.graph, sub, lab("y", sub.ext.size()));
    CHECK(cr.graph.edge_count() == rr.graph.edge_count() + 1 - sub.edges.size());
    auto again = replace(cr.graph, cr.new_edge, as_graph);
    CHECK(isomorphic(again, rr.graph));
  }
}

TEST_CASE("isomorphism respects ext order") {
  auto h = handle(lab("p", 2));
  G rev = h;
  rev.set_ext({1, 0});
  CHECK_FALSE(isomorphic(h, rev));
  CHECK_FALSE(oracle::brute_isomorphic(h, rev));
  CHECK_FALSE(isomorphic(string_graph("ab"), string_graph("ba")));
  CHECK(canonical_form(string_graph("ab")) != canonical_form(string_graph("ba")));
}

TEST_CASE("canonical form agrees with brute-force isomorphism on random graphs") {
  std::mt19937 rng(5);
  std::vector<G> pool;
  for (int i = 0; i < 150; ++i) pool.push_back(oracle::random_graph(rng, std::vector<Label>{lab("a", 2), lab("c", 1)}, 4, 3, i % 3));
  for (int i = 0; i < 50; ++i) pool.push_back(oracle::shuffled(rng, pool[static_cast<std::size_t>(i)]));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    auto iso = isomorphism(pool[i], oracle::shuffled(rng, pool[i]));
    REQUIRE(iso.has_value());
    for (std::size_t j = i + 1; j < pool.size(); j += 3) {
      bool brute = oracle::brute_isomorphic(pool[i], pool[j]);
      CHECK(brute == (canonical_form(pool[i]) == canonical_form(pool[j])));
      auto w = isomorphism(pool[i], pool[j]);
      CHECK(brute == w.has_value());
      if (w) CHECK(is_isomorphism(pool[i], pool[j], *w));
    }
  }
}

TEST_CASE("canonical form partitions all 2-node graphs with at most 2 binary edges") {
  // every graph: 2 nodes, 0..2 a-edges (either direction), ext in {[], [0], [1], [0,1], [1,0]}
  std::vector<std::vector<NodeId>> exts = {{}, {0}, {1}, {0, 1}, {1, 0}};
  std::vector<std::vector<NodeId>> dirs = {{0, 1}, {1, 0}};
  std::vector<G> all;
  for (const auto& ext : exts) {
    for (int m = 0; m <= 2; ++m) {
      int combos = 1;
      for (int k = 0; k < m; ++k) combos *= 2;
      for (int c = 0; c < combos; ++c) {
        G g(2);
        for (int k = 0; k < m; ++k) g.add_edge(lab("a", 2), dirs[static_cast<std::size_t>((c >> k) & 1)]);
        g.set_ext(ext);
        all.push_back(g);
      }
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      CHECK(oracle::brute_isomorphic(all[i], all[j]) == (canonical_form(all[i]) == canonical_form(all[j])));
}

TEST_CASE("canonical form counts isolated nodes and nullary edges") {
  G a(3), b(2);
  CHECK(canonical_form(a) != canonical_form(b));
  G c(1), d(1);
  c.add_edge(lab("z", 0), {});
  d.add_edge(lab("z", 0), {});
  d.add_edge(lab("z", 0), {});
  CHECK(canonical_form(c) != canonical_form(d));
}

TEST_CASE("embedding enumeration") {
  auto is_slot = [](const Label& l) { return l.sym == "$"; };
  auto h = handle(lab("p", 2));
  CHECK(enumerate_embeddings<Label>(h, h, {}, is_slot).size() == 1);

  G pattern(2);
  pattern.add_edge(lab("$", 1), {0});
  pattern.add_edge(lab("$", 1), {1});
  G y(2);
  y.add_edge(lab("p", 1), {0});
  y.add_edge(lab("p", 1), {1});
  y.set_ext({0});
  auto all = enumerate_embeddings<Label>(pattern, y, {}, is_slot);
  CHECK(all.size() == 2);
  auto anchored = enumerate_embeddings<Label>(pattern, y, {0}, is_slot);
  CHECK(anchored.size() == 1);
  CHECK(anchored.size() <= all.size());
}

TEST_CASE("slot decompositions match a brute-force partition count") {
  // Pattern: one binary slot edge over two nodes. Host: string graph. Every host edge
  // must land in the slot, so exactly the maps sending the slot ends to the host
  // ends which make a valid (connected or not) subgraph are counted.
  auto is_slot = [](const Label& l) { return l.sym == "$"; };
  G pattern(2);
  pattern.add_edge(lab("$", 2), {0, 1});
  auto host = string_graph("ab");
  auto emb = enumerate_embeddings<Label>(pattern, host, {}, is_slot);
  // slot must absorb both edges and its middle node; ends can be any two distinct
  // nodes provided the middle node is not an interior leaving node -> brute force:
  std::size_t brute = 0;
  for (NodeId x = 0; x < 3; ++x)
    for (NodeId y2 = 0; y2 < 3; ++y2) {
      if (x == y2) continue;
      // nodes not in {x,y2} are interior to the slot; always fine since all edges go in
      ++brute;
    }
  CHECK(emb.size() == brute);
  for (const auto& d : emb) {
    CHECK(d.slot_edges[0].size() == 2);
    CHECK(d.slot_nodes[0].size() == 1);
  }
}
