#include <cassert>
#include <map>
#include <sstream>

#include "tam/compilers.hpp"
#include "tam/counters.hpp"
#include "tam/emit.hpp"

namespace tam {

namespace {

// One zig-zag slab with two embedded counters: v1 counts rows within a
// stripe period and re-arms at every black row, v2 counts the black rows so
// the final one can switch the machine into its remainder phase. Rows
// alternate traversal direction; increments ride the odd (hi-to-lo) rows,
// black rows are direction-free constant writes.
struct StripeSlabCfg {
  std::string ns;
  int length = 0;       // machine rows beyond the base
  int period = 0;       // world period along the growth axis
  int offset = 0;       // world position of the base row
  int cross_period = 0; // period across the slab (column tags)
  bool force_black = false;  // solid-black variant (period 1 patterns)
  std::string face_label;    // hi-face class glues: <face_label>.B / .W
  bool base_hi_face = true;  // emit the face glue on the base row too
  // Decoration of the base row (u, spec).
  std::function<void(int u, CellSpec&)> base_decor;
};

struct StripeSlabOut {
  int width = 0;
};

struct RowState {
  std::string token;
  std::vector<int> v1_before, v2_before, v1_after, v2_after;
  std::vector<std::string> boundary;  // between u and u+1
  bool from_hi = false;
  bool black = false;
};

StripeSlabOut emit_stripe_slab(SystemBuilder& b, const Frame& f,
                               const StripeSlabCfg& cfg) {
  const int L = cfg.length;
  const int p = cfg.period;
  auto row_black = [&](int r) {
    return cfg.force_black || (cfg.offset + r) % p == 0;
  };

  // Black machine rows and the inter-black segments.
  std::vector<int> blacks;
  for (int r = 1; r <= L; ++r)
    if (!cfg.force_black && row_black(r)) blacks.push_back(r);
  const int K = static_cast<int>(blacks.size());

  auto incs_between = [&](int from, int to) {  // odd rows in (from, to)
    int c = 0;
    for (int r = from + 1; r < to; ++r)
      if (r % 2 == 1) ++c;
    return c;
  };

  // v1 geometry: segment increment counts by parity class of the preceding
  // black row; the first segment is wired into the initial value and the one
  // after the last black into the remainder arm.
  int incs0 = incs_between(0, K > 0 ? blacks[0] : L + 1);
  if (K == 0) incs0 = incs_between(0, L + 1);
  int incs_rem = K > 0 ? incs_between(blacks[K - 1], L + 1) : 0;
  int incs_mid[2] = {-1, -1};
  for (int s = 0; s + 1 < K; ++s) {
    int par = blacks[s] % 2;
    int cnt = incs_between(blacks[s], blacks[s + 1]);
    if (incs_mid[par] < 0)
      incs_mid[par] = cnt;
    else if (incs_mid[par] != cnt)
      throw std::logic_error("stripe slab: uneven segment increments");
  }
  int w1 = 1;
  for (int c : {incs0, incs_rem, incs_mid[0], incs_mid[1]})
    if (c > 0) w1 = std::max(w1, ceil_log2(c + 1));
  int w2 = std::max(1, ceil_log2(K + 1));

  const int W = w2 + w1 + 2;
  // Column roles: u=0 lo turn, [1, w2] v2 (MSB first), [w2+1, w2+w1] v1
  // (MSB first), W-1 hi turn.
  auto is_v2 = [&](int u) { return u >= 1 && u <= w2; };
  auto is_v1 = [&](int u) { return u > w2 && u < W - 1; };
  auto v1_bit_index = [&](int u) { return (w2 + w1) - u; };  // 0 = LSB
  auto v2_bit_index = [&](int u) { return w2 - u; };         // 0 = LSB
  auto col_black = [&](int u) {
    return cfg.force_black || u % cfg.cross_period == 0;
  };

  auto encode = [&](int value, int w) {
    std::vector<int> bits(w);
    for (int i = 0; i < w; ++i) bits[i] = (value >> i) & 1;
    return bits;
  };
  const int ones1 = (1 << w1) - 1;
  std::vector<int> u1_0 = encode(ones1 - incs0, w1);
  std::vector<int> u2_0 = encode((1 << w2) - std::max(K, 1), w2);
  // Arm values by variant: 0/1 = mid-cell by next-cell parity, 2 = remainder.
  std::vector<std::vector<int>> arm1(3, encode(ones1, w1));
  if (incs_mid[0] >= 0) arm1[0] = encode(ones1 - incs_mid[0], w1);
  if (incs_mid[1] >= 0) arm1[1] = encode(ones1 - incs_mid[1], w1);
  arm1[2] = encode(ones1 - incs_rem, w1);

  // Static column tags: color class plus the arm bits (v1 columns).
  auto tag = [&](int u) {
    std::string t = col_black(u) ? "B" : "W";
    if (is_v1(u)) {
      int i = v1_bit_index(u);
      t += "a";
      for (int v = 0; v < 3; ++v) t += static_cast<char>('0' + arm1[v][i]);
    }
    return t;
  };

  // Row schedule. Token notes: cell parity class (or i/r for the initial and
  // remainder stretches) plus a pending-v2 marker.
  struct Plan {
    enum Kind { Inc, Copy, Arm } kind;
    int variant = -1;   // arm variant
    std::string note;
    bool pending = false;  // v2 increment pending (rides white tokens)
  };
  std::vector<Plan> plan(L + 1);
  {
    int next_black = 0;  // index into blacks
    std::string note = "i";
    bool pending = false;
    for (int r = 1; r <= L; ++r) {
      Plan& pl = plan[r];
      if (next_black < K && r == blacks[next_black]) {
        pl.kind = Plan::Arm;
        bool last = next_black == K - 1;
        pl.variant = last ? 2 : (r % 2);
        pl.note = last ? "r" : "a" + std::to_string(pl.variant);
        note = pl.note;
        pending = !last;  // the remainder never advances v2
        ++next_black;
        continue;
      }
      pl.kind = (r % 2 == 1) ? Plan::Inc : Plan::Copy;
      pl.note = note;
      pl.pending = pending;
      if (pl.kind == Plan::Inc) pending = false;
    }
  }

  auto token_of = [&](int r) {
    const Plan& pl = plan[r];
    std::string t;
    switch (pl.kind) {
      case Plan::Inc: t = "I"; break;
      case Plan::Copy: t = "C"; break;
      case Plan::Arm: t = "A" + std::to_string(pl.variant); break;
    }
    t += "_" + pl.note;
    if (pl.pending) t += "P";
    t += (r % 2 == 1) ? "o" : "e";
    return t;
  };
  auto launch_label = [&](int r) { return cfg.ns + "!go." + token_of(r); };

  // Simulate the rows.
  std::vector<RowState> rows(L + 1);
  std::vector<int> v1 = u1_0, v2 = u2_0;
  for (int r = 1; r <= L; ++r) {
    const Plan& pl = plan[r];
    RowState& s = rows[r];
    s.token = token_of(r);
    s.v1_before = v1;
    s.v2_before = v2;
    s.from_hi = (r % 2 == 1);
    s.black = row_black(r);
    s.boundary.assign(W - 1, "");
    std::string base = cfg.ns + "!h." + s.token + ".";
    auto flags = [&](int c, int o1, int o2) {
      return base + "c" + std::to_string(c) + "p" + std::to_string(o1) +
             "q" + std::to_string(o2);
    };
    if (pl.kind == Plan::Arm) {
      for (int i = 0; i < w1; ++i) v1[i] = arm1[pl.variant][i];
      for (int u = 0; u <= W - 2; ++u) s.boundary[u] = base + "a";
    } else if (pl.kind == Plan::Inc) {
      // hi->lo: v1 LSB..MSB, then v2 LSB..MSB.
      int carry = 1, o1 = 1, o2 = 1;
      s.boundary[W - 2] = flags(carry, o1, o2);
      for (int i = 0; i < w1; ++i) {
        int u = (w2 + w1) - i;
        int nb = v1[i] ^ carry;
        carry = v1[i] & carry;
        v1[i] = nb;
        o1 &= nb;
        s.boundary[u - 1] = flags(carry, o1, o2);
      }
      if (carry) throw std::logic_error("stripe slab: v1 overflow");
      // A pending v2 increment enters as a carry at the v1/v2 crossing; the
      // crossing label must carry it or the v2 cells become positional.
      int carry2 = pl.pending ? 1 : 0;
      s.boundary[w2] = flags(carry2, o1, o2);
      for (int i = 0; i < w2; ++i) {
        int u = w2 - i;
        int nb = v2[i] ^ carry2;
        carry2 = v2[i] & carry2;
        v2[i] = nb;
        o2 &= nb;
        s.boundary[u - 1] = flags(carry2, o1, o2);
      }
      if (carry2) throw std::logic_error("stripe slab: v2 overflow");
    } else {
      // Copy. lo->hi: v2 MSB..LSB then v1 MSB..LSB; hi->lo mirrored.
      int o1 = 1, o2 = 1;
      if (s.from_hi) {
        s.boundary[W - 2] = flags(0, o1, o2);
        for (int i = 0; i < w1; ++i) {
          int u = (w2 + w1) - i;
          o1 &= v1[i];
          s.boundary[u - 1] = flags(0, o1, o2);
        }
        for (int i = 0; i < w2; ++i) {
          int u = w2 - i;
          o2 &= v2[i];
          s.boundary[u - 1] = flags(0, o1, o2);
        }
      } else {
        s.boundary[0] = flags(0, o1, o2);
        for (int i = w2 - 1; i >= 0; --i) {
          int u = w2 - i;
          o2 &= v2[i];
          s.boundary[u] = flags(0, o1, o2);
        }
        for (int i = w1 - 1; i >= 0; --i) {
          int u = (w2 + w1) - i;
          o1 &= v1[i];
          s.boundary[u] = flags(0, o1, o2);
        }
      }
    }
    s.v1_after = v1;
    s.v2_after = v2;
  }

  // Launch-consistency audit.
  {
    std::map<std::string, std::string> m;
    for (int r = 1; r <= L; ++r) {
      int eb = rows[r].from_hi ? 0 : W - 2;
      std::string key = rows[r].boundary[eb];
      std::string next = (r == L) ? std::string("<end>") : launch_label(r + 1);
      auto [it, ok] = m.emplace(key, next);
      if (!ok && it->second != next)
        throw std::logic_error("stripe slab: inconsistent launch at row " +
                               std::to_string(r) + " state " + key);
    }
  }

  const std::string lo_chain = cfg.ns + "!tc0";
  const std::string hi_chain = cfg.ns + "!tc1";
  auto vlabel = [&](int u, const std::vector<int>& bv1,
                    const std::vector<int>& bv2) {
    int bit = is_v1(u) ? bv1[v1_bit_index(u)] : bv2[v2_bit_index(u)];
    return cfg.ns + "!v" + std::to_string(bit) + "." + tag(u);
  };
  auto up_glue = [&](int u, int r) -> Glue {
    const std::vector<int>& bv1 = (r == 0) ? u1_0 : rows[r].v1_after;
    const std::vector<int>& bv2 = (r == 0) ? u2_0 : rows[r].v2_after;
    if (r == L) {
      if (u == 0) return g1(lo_chain);
      if (u == W - 1) return g1(hi_chain);
      return g1(vlabel(u, bv1, bv2));
    }
    bool next_from_hi = ((r + 1) % 2 == 1);
    if (u == 0) return next_from_hi ? g1(lo_chain) : g2(launch_label(r + 1));
    if (u == W - 1)
      return next_from_hi ? g2(launch_label(r + 1)) : g1(hi_chain);
    return g1(vlabel(u, bv1, bv2));
  };
  auto color_of = [&](int r, int u) {
    return (row_black(r) || col_black(u)) ? kBlack : kWhite;
  };
  auto face_of = [&](int r) {
    return g1(cfg.face_label + "." + (row_black(r) ? "B" : "W"));
  };

  // Base row.
  for (int u = 0; u < W; ++u) {
    CellSpec c;
    c.color = color_of(0, u);
    c.glue(f.r_pos()) = up_glue(u, 0);
    if (u + 1 < W) c.glue(f.u_pos()) = g2(cfg.ns + "!b" + std::to_string(u));
    if (u > 0) c.glue(f.u_neg()) = g2(cfg.ns + "!b" + std::to_string(u - 1));
    if (u == W - 1 && cfg.base_hi_face) c.glue(f.u_pos()) = face_of(0);
    if (cfg.base_decor) cfg.base_decor(u, c);
    b.put(f.at(u, 0), c);
  }
  // Machine rows.
  for (int r = 1; r <= L; ++r) {
    const RowState& s = rows[r];
    for (int u = 0; u < W; ++u) {
      CellSpec c;
      c.color = color_of(r, u);
      if (u == 0)
        c.glue(f.r_neg()) = s.from_hi ? g1(lo_chain) : g2(launch_label(r));
      else if (u == W - 1)
        c.glue(f.r_neg()) = s.from_hi ? g2(launch_label(r)) : g1(hi_chain);
      else
        c.glue(f.r_neg()) = g1(vlabel(u, s.v1_before, s.v2_before));
      c.glue(f.r_pos()) = up_glue(u, r);
      if (u > 0) c.glue(f.u_neg()) = g1(s.boundary[u - 1]);
      if (u + 1 < W) c.glue(f.u_pos()) = g1(s.boundary[u]);
      if (u == W - 1) c.glue(f.u_pos()) = face_of(r);
      b.put(f.at(u, r), c);
    }
  }
  return StripeSlabOut{W};
}

}  // namespace

CompiledSystem compile_stripes(int n, int i, int j) {
  Pattern target = stripes(n, i, j);  // validates arguments
  const std::string sym = "O(log n)";
  const long long cap = 48ll * ceil_log2(std::max(2, n)) + 420;

  SystemBuilder b(Dim::D2, 2);

  // Solid-black degenerate periods reuse the machinery with forced color.
  bool solid = (i == 1 || j == 1);

  // Rough slab dimensions; fall back to a fully hard-coded square when the
  // machinery does not fit.
  auto fits = [&]() {
    if (n <= 8) return false;
    int k_v = (n - 1) / j;
    int w_v = std::max(1, ceil_log2(std::max(1, (j + 1) / 2) + 1)) +
              std::max(1, ceil_log2(k_v + 1)) + 2;
    if (w_v >= n) return false;
    return true;
  };

  if (!fits()) {
    // Hard-coded: spine at x=0 plus per-position rows.
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        CellSpec c;
        c.color = target.at(x, y);
        if (x == 0) {
          if (y > 0) c.glue(Dir::S) = g2("st!c" + std::to_string(y));
          if (y + 1 < n) c.glue(Dir::N) = g2("st!c" + std::to_string(y + 1));
        }
        if (x > 0)
          c.glue(Dir::W) =
              g2("st!r" + std::to_string(x) + "." + std::to_string(y));
        if (x + 1 < n)
          c.glue(Dir::E) =
              g2("st!r" + std::to_string(x + 1) + "." + std::to_string(y));
        b.put({x, y, 0}, c);
      }
    b.set_seed({0, 0, 0});
    CompiledSystem cs{b.build("st"), target, {sym, cap, 0}, {}, {}};
    cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
    cs.intended = b.intended_placements(cs.system);
    return cs;
  }

  // Vertical slab along the west edge: marks row classes (y mod j).
  StripeSlabCfg vcfg;
  vcfg.ns = "st.v";
  vcfg.length = n - 1;
  vcfg.period = j;
  vcfg.offset = 0;
  vcfg.cross_period = i;
  vcfg.force_black = solid;
  vcfg.face_label = "st!f.row";
  vcfg.base_hi_face = false;  // that slot anchors the horizontal slab
  StripeSlabOut v = emit_stripe_slab(b, Frame::north({0, 0, 0}), vcfg);
  const int wv = v.width;
  if (wv >= n) throw std::logic_error("stripes: vertical slab too wide");

  // Horizontal slab along the south edge, east of the vertical slab: marks
  // column classes (x mod i). Its base is the hard-coded column at x = wv.
  StripeSlabCfg hcfg;
  hcfg.ns = "st.h";
  hcfg.length = n - 1 - wv;
  hcfg.period = i;
  hcfg.offset = wv;
  hcfg.cross_period = j;
  hcfg.force_black = solid;
  hcfg.face_label = "st!f.col";
  hcfg.base_decor = [&](int u, CellSpec& c) {
    if (u == 0) c.glue(Dir::W) = g2("st!hanchor");
  };
  StripeSlabOut h = emit_stripe_slab(b, Frame::east({wv, 0, 0}), hcfg);
  const int wh = h.width;
  if (wh > n) throw std::logic_error("stripes: horizontal slab too tall");

  // Anchor the horizontal slab's base column to the vertical base row.
  b.decorate({wv - 1, 0, 0}, Dir::E, g2("st!hanchor"));

  // Cooperative fill: reads column classes from the south and row classes
  // from the west and propagates both.
  if (wh < n)
    for (int y = wh; y < n; ++y)
      for (int x = wv; x < n; ++x) {
        bool cb = solid || x % i == 0;
        bool rb = solid || y % j == 0;
        CellSpec c;
        c.color = (cb || rb) ? kBlack : kWhite;
        c.glue(Dir::S) = g1(std::string("st!f.col.") + (cb ? "B" : "W"));
        c.glue(Dir::N) = g1(std::string("st!f.col.") + (cb ? "B" : "W"));
        c.glue(Dir::W) = g1(std::string("st!f.row.") + (rb ? "B" : "W"));
        c.glue(Dir::E) = g1(std::string("st!f.row.") + (rb ? "B" : "W"));
        b.put({x, y, 0}, c);
      }

  b.set_seed({0, 0, 0});
  if (b.target_pattern() != target)
    throw std::logic_error("stripes: painted region mismatch");

  CompiledSystem cs{b.build("st"), target, {sym, cap, 0}, {}, {}};
  cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
  cs.intended = b.intended_placements(cs.system);
  cs.stats["v_slab_width"] = wv;
  cs.stats["h_slab_height"] = wh;
  return cs;
}

}  // namespace tam
