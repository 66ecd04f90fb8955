#include "tam/counters.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace tam {

namespace {

Dir delta_dir(int dx, int dy) {
  if (dx == 1 && dy == 0) return Dir::E;
  if (dx == -1 && dy == 0) return Dir::W;
  if (dx == 0 && dy == 1) return Dir::N;
  if (dx == 0 && dy == -1) return Dir::S;
  throw std::logic_error("bad frame delta");
}

}  // namespace

Dir Frame::u_pos() const { return delta_dir(ux, uy); }
Dir Frame::u_neg() const { return delta_dir(-ux, -uy); }
Dir Frame::r_pos() const { return delta_dir(rx, ry); }
Dir Frame::r_neg() const { return delta_dir(-rx, -ry); }

namespace {

struct RowSim {
  std::string token;        // kind+variant+note+parity
  std::vector<int> before;  // bits before the row
  std::vector<int> after;   // bits after the row
  // Lateral state labels at each boundary: boundary[u] sits between columns
  // u and u+1, for u in [0, W-2].
  std::vector<std::string> boundary;
  bool from_hi = false;
};

}  // namespace

SlabResult emit_slab(SystemBuilder& b, const Frame& f, const SlabConfig& cfg) {
  const int w = cfg.w_bits;
  const int W = w + 2;
  const int R = static_cast<int>(cfg.rows.size());
  if (w < 1) throw std::logic_error("slab: w_bits must be >= 1");
  if (static_cast<int>(cfg.u0.size()) != w)
    throw std::logic_error("slab: u0 size mismatch");
  for (const auto& av : cfg.arm_values)
    if (static_cast<int>(av.size()) != w)
      throw std::logic_error("slab: arm value size mismatch");

  auto color = [&](int r, int u) -> ColorId {
    return cfg.color ? cfg.color(r, u) : kWhite;
  };
  // Column for bit index i (0 = LSB): LSB sits next to the hi turn.
  auto bit_col = [&](int i) { return W - 2 - i; };
  auto col_bit = [&](int u) { return W - 2 - u; };

  // Static per-column tag: arm bits for every variant plus caller extras.
  auto tag = [&](int u) {
    std::string t = "c";
    int i = col_bit(u);
    for (const auto& av : cfg.arm_values) t += static_cast<char>('0' + av[i]);
    if (cfg.col_extra_tag) t += cfg.col_extra_tag(u);
    return t;
  };
  auto vlabel = [&](int u, int bit) {
    return cfg.ns + "!v" + std::to_string(bit) + "." + tag(u);
  };
  auto token_of = [&](int r) {
    const SlabRowPlan& p = cfg.rows[r - 1];
    std::string t;
    switch (p.kind) {
      case SlabRowPlan::Inc: t = "I"; break;
      case SlabRowPlan::Copy: t = "C"; break;
      case SlabRowPlan::Arm: t = "A" + std::to_string(p.arm_variant); break;
    }
    if (!p.note.empty()) t += "_" + p.note;
    t += (r % 2 == 1) ? "o" : "e";
    return t;
  };
  auto launch_label = [&](int r) { return cfg.ns + "!go." + token_of(r); };

  // Simulate every row.
  std::vector<RowSim> sims(R + 1);
  std::vector<int> bits = cfg.u0;
  for (int r = 1; r <= R; ++r) {
    const SlabRowPlan& p = cfg.rows[r - 1];
    RowSim& s = sims[r];
    s.token = token_of(r);
    s.before = bits;
    s.from_hi = (r % 2 == 1);
    s.boundary.assign(W - 1, "");
    std::string base = cfg.ns + "!h." + s.token + ".";
    switch (p.kind) {
      case SlabRowPlan::Inc: {
        if (!s.from_hi)
          throw std::logic_error("slab: increment scheduled on an even row");
        int carry = 1, ones = 1;
        s.boundary[W - 2] = base + "c1o1";
        for (int i = 0; i < w; ++i) {  // LSB outward
          int u = bit_col(i);
          int nb = bits[i] ^ carry;
          carry = bits[i] & carry;
          bits[i] = nb;
          ones &= nb;
          if (u - 1 >= 0)
            s.boundary[u - 1] =
                base + "c" + std::to_string(carry) + "o" + std::to_string(ones);
        }
        if (carry)
          throw std::logic_error("slab: increment overflow (row " +
                                 std::to_string(r) + ")");
        break;
      }
      case SlabRowPlan::Copy: {
        int ones = 1;
        if (s.from_hi) {
          s.boundary[W - 2] = base + "o1";
          for (int i = 0; i < w; ++i) {
            int u = bit_col(i);
            ones &= bits[i];
            if (u - 1 >= 0) s.boundary[u - 1] = base + "o" + std::to_string(ones);
          }
        } else {
          s.boundary[0] = base + "o1";
          for (int i = w - 1; i >= 0; --i) {
            int u = bit_col(i);
            ones &= bits[i];
            // boundary[u] sits between u and u+1: the state after column u.
            s.boundary[u] = base + "o" + std::to_string(ones);
          }
        }
        break;
      }
      case SlabRowPlan::Arm: {
        if (p.arm_variant < 0 ||
            p.arm_variant >= static_cast<int>(cfg.arm_values.size()))
          throw std::logic_error("slab: arm variant out of range");
        bits = cfg.arm_values[p.arm_variant];
        for (int u = 0; u <= W - 2; ++u) s.boundary[u] = base + "a";
        break;
      }
    }
    s.after = bits;
  }

  // Launch-consistency: the end-turn tile of row r decides row r+1's launch
  // from its glue inputs alone.
  std::map<std::string, std::string> launch_map;
  for (int r = 1; r <= R; ++r) {
    int end_boundary = sims[r].from_hi ? 0 : W - 2;
    std::string key = sims[r].boundary[end_boundary];
    std::string next = (r == R) ? std::string("<end>") : launch_label(r + 1);
    auto [it, inserted] = launch_map.emplace(key, next);
    if (!inserted && it->second != next)
      throw std::logic_error("slab: inconsistent launch decision at row " +
                             std::to_string(r) + " (state " + key + ")");
  }

  const std::string lo_chain = cfg.ns + "!tc0";
  const std::string hi_chain = cfg.ns + "!tc1";

  // +r glue of cell (u, r). For r < R the glue feeding row r+1 (launch on
  // the start turn); for the top row the same labels dangle at strength 1 so
  // the top row's tiles stay interchangeable with mid-row ones, except where
  // top_face overrides.
  auto up_glue = [&](int u, int r) -> Glue {
    if (r == R) {
      if (cfg.top_face) {
        Glue t = cfg.top_face(u);
        if (!t.is_null()) return t;
      }
      if (u == 0) return g1(lo_chain);
      if (u == W - 1) return g1(hi_chain);
      const std::vector<int>& bv = (r == 0) ? cfg.u0 : sims[r].after;
      return g1(vlabel(u, bv[col_bit(u)]));
    }
    bool next_from_hi = ((r + 1) % 2 == 1);
    if (u == 0)
      return next_from_hi ? g1(lo_chain) : g2(launch_label(r + 1));
    if (u == W - 1)
      return next_from_hi ? g2(launch_label(r + 1)) : g1(hi_chain);
    const std::vector<int>& bv = (r == 0) ? cfg.u0 : sims[r].after;
    return g1(vlabel(u, bv[col_bit(u)]));
  };

  SlabResult result;
  result.width = W;
  result.rows = R;
  result.base_up.resize(W);
  for (int u = 0; u < W; ++u) result.base_up[u] = up_glue(u, 0);

  // Paint the base row.
  if (!cfg.external_base) {
    for (int u = 0; u < W; ++u) {
      CellSpec c;
      c.color = color(0, u);
      c.glue(f.r_pos()) = result.base_up[u];
      if (u + 1 < W)
        c.glue(f.u_pos()) = g2(cfg.ns + "!b" + std::to_string(u));
      if (u > 0) c.glue(f.u_neg()) = g2(cfg.ns + "!b" + std::to_string(u - 1));
      if (u == 0 && cfg.lo_face) {
        Glue face = cfg.lo_face(0);
        if (!face.is_null()) c.glue(f.u_neg()) = face;
      }
      if (u == W - 1 && cfg.hi_face) {
        Glue face = cfg.hi_face(0);
        if (!face.is_null()) c.glue(f.u_pos()) = face;
      }
      if (cfg.base_decor) cfg.base_decor(u, c);
      b.put(f.at(u, 0), c);
    }
  }

  // Paint rows 1..R.
  for (int r = 1; r <= R; ++r) {
    const RowSim& s = sims[r];
    for (int u = 0; u < W; ++u) {
      CellSpec c;
      c.color = color(r, u);
      // -r glue (toward row r-1).
      if (u == 0)
        c.glue(f.r_neg()) = s.from_hi ? g1(lo_chain) : g2(launch_label(r));
      else if (u == W - 1)
        c.glue(f.r_neg()) = s.from_hi ? g2(launch_label(r)) : g1(hi_chain);
      else
        c.glue(f.r_neg()) = g1(vlabel(u, s.before[col_bit(u)]));
      // +r glue.
      c.glue(f.r_pos()) = up_glue(u, r);
      // Lateral glues.
      if (u > 0) c.glue(f.u_neg()) = g1(s.boundary[u - 1]);
      if (u + 1 < W) c.glue(f.u_pos()) = g1(s.boundary[u]);
      if (u == 0 && cfg.lo_face) {
        Glue face = cfg.lo_face(r);
        if (!face.is_null()) c.glue(f.u_neg()) = face;
      }
      if (u == W - 1 && cfg.hi_face) {
        Glue face = cfg.hi_face(r);
        if (!face.is_null()) c.glue(f.u_pos()) = face;
      }
      b.put(f.at(u, r), c);
    }
  }
  return result;
}

OneShotPlan one_shot_plan(int rows) {
  OneShotPlan plan;
  int incs = (rows + 1) / 2;
  plan.w_bits = std::max(1, ceil_log2(incs + 1));
  int u0 = (1 << plan.w_bits) - 1 - incs;
  plan.u0.resize(plan.w_bits);
  for (int i = 0; i < plan.w_bits; ++i) plan.u0[i] = (u0 >> i) & 1;
  for (int r = 1; r <= rows; ++r) {
    SlabRowPlan p;
    p.kind = (r % 2 == 1) ? SlabRowPlan::Inc : SlabRowPlan::Copy;
    plan.rows.push_back(p);
  }
  return plan;
}


SegmentedPlan segmented_plan(int rows, const std::vector<int>& arm_rows_in,
                             int w_bits) {
  SegmentedPlan plan;
  std::vector<std::pair<int, int>> arms;  // (row, origin index)
  for (std::size_t k = 0; k < arm_rows_in.size(); ++k)
    arms.emplace_back(arm_rows_in[k], static_cast<int>(k));
  if (arms.empty() || arms.back().first != rows)
    if (rows > 0) arms.emplace_back(rows, -1);
  for (std::size_t k = 0; k + 1 < arms.size(); ++k)
    if (arms[k].first >= arms[k + 1].first)
      throw std::logic_error("segmented_plan: arm rows not increasing");

  auto incs_in = [](int from, int to) {  // odd rows in (from, to)
    int c = 0;
    for (int r = from + 1; r < to; ++r)
      if (r % 2 == 1) ++c;
    return c;
  };

  // Width: large enough for every inter-arm run, or as forced; insert chain
  // arms where a forced width is too small.
  int w = std::max(1, w_bits);
  if (w_bits <= 0) {
    int prev = 0;
    for (auto [a, orig] : arms) {
      w = std::max(w, ceil_log2(incs_in(prev, a) + 1));
      prev = a;
    }
  } else {
    int cap = (1 << w) - 1;
    std::vector<std::pair<int, int>> out;
    int prev = 0;
    for (auto [a, orig] : arms) {
      while (incs_in(prev, a) > cap) {
        int mid = prev + 2 * cap;  // at most `cap` increments in (prev, mid)
        out.emplace_back(mid, -1);
        prev = mid;
      }
      out.emplace_back(a, orig);
      prev = a;
    }
    arms = out;
  }

  plan.w_bits = w;
  plan.rows.assign(rows, SlabRowPlan{});
  auto encode = [&](int value) {
    std::vector<int> bits(w);
    for (int i = 0; i < w; ++i) bits[i] = (value >> i) & 1;
    return bits;
  };
  int prev = 0;
  for (std::size_t seg = 0; seg < arms.size(); ++seg) {
    auto [a, orig] = arms[seg];
    int incs = incs_in(prev, a);
    if (incs > (1 << w) - 1)
      throw std::logic_error("segmented_plan: segment too long for width");
    std::vector<int> start = encode((1 << w) - 1 - incs);
    if (prev == 0)
      plan.u0 = start;
    else
      plan.arm_values.back() = start;
    for (int r = prev + 1; r < a; ++r) {
      plan.rows[r - 1].kind =
          (r % 2 == 1) ? SlabRowPlan::Inc : SlabRowPlan::Copy;
      plan.rows[r - 1].note = "s" + std::to_string(seg);
    }
    plan.rows[a - 1].kind = SlabRowPlan::Arm;
    plan.rows[a - 1].arm_variant = static_cast<int>(plan.arm_values.size());
    plan.rows[a - 1].note = "s" + std::to_string(seg + 1);
    plan.arm_values.push_back(encode((1 << w) - 1));
    plan.arm_origin.push_back(orig);
    prev = a;
  }
  if (rows == 0) plan.u0 = encode((1 << w) - 1);
  if (plan.u0.empty()) plan.u0 = encode((1 << w) - 1);
  return plan;
}

void emit_ring(SystemBuilder& b, const RingConfig& cfg) {
  if (cfg.w < 2 || cfg.h < 2) throw std::logic_error("ring too small");
  // Perimeter cells in counterclockwise order starting at the anchor.
  std::vector<Loc> peri;
  int x1 = cfg.x0 + cfg.w - 1, y1 = cfg.y0 + cfg.h - 1;
  for (int x = cfg.x0; x <= x1; ++x) peri.push_back({x, cfg.y0, cfg.anchor.z});
  for (int y = cfg.y0 + 1; y <= y1; ++y) peri.push_back({x1, y, cfg.anchor.z});
  for (int x = x1 - 1; x >= cfg.x0; --x) peri.push_back({x, y1, cfg.anchor.z});
  for (int y = y1 - 1; y >= cfg.y0 + 1; --y)
    peri.push_back({cfg.x0, y, cfg.anchor.z});
  auto at = std::find(peri.begin(), peri.end(), cfg.anchor);
  if (at == peri.end()) throw std::logic_error("ring anchor not on perimeter");
  std::rotate(peri.begin(), at, peri.end());

  std::map<Loc, CellSpec> specs;
  for (const Loc& l : peri) {
    CellSpec c;
    c.color = cfg.color ? cfg.color(l.x, l.y) : kWhite;
    specs[l] = c;
  }
  // Chain consecutive perimeter cells with unique strength-2 glues.
  for (std::size_t k = 0; k + 1 < peri.size(); ++k) {
    const Loc& a = peri[k];
    const Loc& nb = peri[k + 1];
    Dir d = delta_dir(nb.x - a.x, nb.y - a.y);
    Glue g = g2(cfg.ns + "!r" + std::to_string(k));
    specs[a].glue(d) = g;
    specs[nb].glue(opposite(d)) = g;
  }
  // Interior fill faces.
  if (cfg.fill_interior && cfg.w > 2 && cfg.h > 2) {
    std::string fl = cfg.ns + "!if";
    for (int x = cfg.x0 + 1; x < x1; ++x)
      specs[{x, cfg.y0, cfg.anchor.z}].glue(Dir::N) = g1(fl);
    for (int y = cfg.y0 + 1; y < y1; ++y)
      specs[{cfg.x0, y, cfg.anchor.z}].glue(Dir::E) = g1(fl);
    for (int y = cfg.y0 + 1; y < y1; ++y)
      for (int x = cfg.x0 + 1; x < x1; ++x) {
        CellSpec c;
        c.color = cfg.color ? cfg.color(x, y) : kWhite;
        c.glue(Dir::N) = g1(fl);
        c.glue(Dir::S) = g1(fl);
        c.glue(Dir::E) = g1(fl);
        c.glue(Dir::W) = g1(fl);
        b.put({x, y, cfg.anchor.z}, c);
      }
  }
  for (auto& [l, c] : specs) {
    if (cfg.decor) cfg.decor(l.x, l.y, c);
    b.put(l, c);
  }
}

void emit_rect_fill(SystemBuilder& b, int x0, int y0, int w, int h,
                    const std::string& label_sn, const std::string& label_we,
                    ColorId color) {
  if (w <= 0 || h <= 0) return;
  CellSpec c;
  c.color = color;
  c.glue(Dir::N) = g1(label_sn);
  c.glue(Dir::S) = g1(label_sn);
  c.glue(Dir::E) = g1(label_we);
  c.glue(Dir::W) = g1(label_we);
  for (int y = y0; y < y0 + h; ++y)
    for (int x = x0; x < x0 + w; ++x) b.put({x, y, 0}, c);
}

CounterGroup make_counter(SystemBuilder& b, const CounterSpec& spec,
                          const Loc& base_origin) {
  if (spec.start > spec.end)
    throw SpecError("make_counter: start > end");
  if (spec.width < 1) throw SpecError("make_counter: width must be positive");
  if (spec.end >= (1ll << spec.width))
    throw SpecError("make_counter: end does not fit in width bits");
  for (long long c : spec.black_rows)
    if (c < spec.start || c > spec.end)
      throw SpecError("make_counter: black row outside count range");

  const int R = static_cast<int>(spec.end - spec.start);

  // Every black count above `start` becomes an arm row; segmented_plan adds
  // the final arm that carries the done face.
  std::vector<int> arm_rows;
  for (long long c : spec.black_rows)
    if (c > spec.start) arm_rows.push_back(static_cast<int>(c - spec.start));
  SegmentedPlan plan = segmented_plan(R, arm_rows);

  SlabConfig cfg;
  cfg.ns = spec.ns;
  cfg.w_bits = std::max(plan.w_bits, spec.width);
  if (cfg.w_bits > plan.w_bits) {
    // Re-plan at the spec width so the encodings match the wider slab.
    plan = segmented_plan(R, arm_rows, cfg.w_bits);
  }
  cfg.u0 = plan.u0;
  cfg.arm_values = plan.arm_values;
  cfg.rows = plan.rows;

  auto is_black_row = [&](int r) {
    return spec.black_rows.count(spec.start + r) != 0;
  };
  cfg.color = [&](int r, int) -> ColorId {
    return is_black_row(r) ? kBlack : kWhite;
  };
  cfg.lo_face = [&, R](int r) {
    return g1(spec.ns + (r == R && R > 0 ? ".ticktop" : ".tick"));
  };
  cfg.hi_face = cfg.lo_face;
  // One distinguished done glue on the final row's end-turn cell (that tile
  // is already distinct); shared bit tiles stay face-free.
  int done_col = (R % 2 == 1) ? 0 : cfg.w_bits + 1;
  if (R == 0) done_col = 0;
  cfg.top_face = [&, done_col](int u) {
    return u == done_col ? g1(spec.ns + ".done") : Glue{};
  };

  Frame f;
  switch (spec.orientation) {
    case CounterSpec::Orient::North: f = Frame::north(base_origin); break;
    case CounterSpec::Orient::South: f = Frame::south(base_origin); break;
    case CounterSpec::Orient::East: f = Frame::east(base_origin); break;
    case CounterSpec::Orient::West: f = Frame::west(base_origin); break;
  }
  SlabResult res = emit_slab(b, f, cfg);
  return CounterGroup{res.width, R + 1, base_origin};
}

}  // namespace tam
