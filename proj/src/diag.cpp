#include "tam/diag.hpp"

#include <cassert>
#include <map>

#include "tam/counters.hpp"
#include "tam/emit.hpp"

namespace tam {

const char* bit_reason_name(BitReason r) {
  switch (r) {
    case BitReason::Flip: return "flip";
    case BitReason::EmptyFrontierEarly: return "emptyFrontierEarly";
    case BitReason::NoBoundaryColor: return "noBoundaryColor";
    case BitReason::TooSmall: return "tooSmall";
    case BitReason::NoIndexTile: return "noIndexTile";
  }
  return "?";
}

std::string BitSequence::bit_string() const {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}

BigUint count_sf_systems(const Universe& u) {
  BigUint total;
  for (int t = 1; t <= u.max_tile_types; ++t) {
    BigUint glues(static_cast<std::uint64_t>(t) + 1);
    BigUint per_tile = BigUint(static_cast<std::uint64_t>(u.num_coop_sets)) *
                       BigUint(static_cast<std::uint64_t>(u.num_colors)) *
                       glues.pow(4);
    total += per_tile.pow(static_cast<unsigned>(t)) *
             BigUint(static_cast<std::uint64_t>(t));
  }
  return total;
}

namespace {

// Little-endian odometer over a tile set: glue slots within a tile first,
// then color, then coop set; tiles[0] least significant. Returns false on
// wrap-around (all combinations exhausted).
bool increment_tileset(std::vector<SFTile>& tiles, int num_colors,
                       int num_coops, int num_glues) {
  for (SFTile& tile : tiles) {
    for (int loc = 0; loc < 4; ++loc) {
      if (tile.labels[loc] == num_glues - 1) {
        tile.labels[loc] = 0;
      } else {
        ++tile.labels[loc];
        return true;
      }
    }
    if (tile.color == num_colors - 1) {
      tile.color = 0;
    } else {
      ++tile.color;
      return true;
    }
    if (tile.coop == num_coops - 1) {
      tile.coop = 0;
    } else {
      ++tile.coop;
      return true;
    }
  }
  return false;
}

}  // namespace

std::uint64_t sf_enumerate(const Universe& u,
                           const std::function<bool(const SFSystem&)>& fn) {
  std::uint64_t serial = 0;
  for (int t = 1; t <= u.max_tile_types; ++t) {
    int num_glues = t + 1;
    SFSystem sys;
    sys.tiles.assign(t, SFTile{});
    bool more = true;
    while (more) {
      for (int seed = 0; seed < t; ++seed) {
        sys.seed_index = seed;
        ++serial;
        if (!fn(sys)) return serial;
      }
      more = increment_tileset(sys.tiles, u.num_colors, u.num_coop_sets,
                               num_glues);
    }
  }
  return serial;
}

namespace {

bool is_boundary_color(int c) { return c >= kWhite && c <= kGreen; }

// First tile (by insertion order) at each coordinate value.
std::map<int, int> first_tile_by_coord(const Assembly& a, bool by_x) {
  std::map<int, int> first;  // coord -> tile index
  for (const Loc& l : a.insertion_order) {
    int c = by_x ? l.x : l.y;
    if (!first.count(c)) first[c] = *a.tile_at(l);
  }
  return first;
}

}  // namespace

SimOutcome get_pattern_value(const std::vector<SFTile>& tiles,
                             const Assembly& a, std::uint64_t patt_size,
                             std::uint64_t index) {
  std::uint64_t width = static_cast<std::uint64_t>(a.max_x - a.min_x);
  std::uint64_t height = static_cast<std::uint64_t>(a.max_y - a.min_y);
  bool horizontal = width >= patt_size;
  bool small = width < patt_size && height < patt_size;
  auto first = first_tile_by_coord(a, horizontal);
  int lo = horizontal ? a.min_x : a.min_y;
  int hi = horizontal ? a.max_x : a.max_y;

  int boundary_at = lo - 1;
  for (int c = lo; c <= hi; ++c) {
    auto it = first.find(c);
    if (it == first.end()) continue;
    if (is_boundary_color(tiles[it->second].color)) {
      boundary_at = c;
      break;
    }
  }
  if (boundary_at < lo)
    return {0, small ? BitReason::TooSmall : BitReason::NoBoundaryColor};

  long long probe = boundary_at + static_cast<long long>(index);
  auto it = first.find(static_cast<int>(probe));
  if (probe > hi || it == first.end())
    return {0, small ? BitReason::TooSmall : BitReason::NoIndexTile};

  int color = tiles[it->second].color;
  int bit;
  if (horizontal) {
    if (index == 0)
      bit = (color == kWhite || color == kGreen) ? 0 : 1;
    else
      bit = (color == kAqua || color == kBlue) ? 0 : 1;
  } else {
    if (index == 0)
      bit = (color == kWhite || color == kBlack) ? 0 : 1;
    else
      bit = (color == kAqua || color == kYellow) ? 0 : 1;
  }
  return {bit, BitReason::Flip};
}

SimOutcome simulate_sf(const SFSystem& sys, std::uint64_t num_steps,
                       std::uint64_t patt_size, std::uint64_t index,
                       const Universe& u) {
  if (u.mode == Universe::PaperFlow)
    throw Unsupported(
        "paperFlow mode requires the external strength-free to aTAM "
        "conversion; use directSF");
  SFSimState st = sf_init(sys);
  for (std::uint64_t s = 0; s < num_steps; ++s) {
    if (!sf_add_tile(st)) return {0, BitReason::EmptyFrontierEarly};
    if (st.frontier.empty()) return {0, BitReason::EmptyFrontierEarly};
  }
  return get_pattern_value(sys.tiles, st.assembly, patt_size, index);
}

BitSequence compute_bits(const Universe& u, std::uint64_t hard_cap) {
  BigUint count = count_sf_systems(u);
  if (BigUint(hard_cap) < count)
    throw UniverseTooLarge("universe enumerates " + count.to_string() +
                           " systems, above the cap of " +
                           std::to_string(hard_cap));
  std::uint64_t num_systems = count.to_u64();
  std::uint64_t steps =
      u.step_budget.value_or(4 * num_systems * num_systems);
  std::uint64_t patt = u.patt_size.value_or(num_systems);

  BitSequence out;
  out.bits.reserve(num_systems);
  std::uint64_t serial = 0;
  sf_enumerate(u, [&](const SFSystem& sys) {
    SimOutcome o = simulate_sf(sys, steps, patt, serial, u);
    out.bits.push_back(o.bit);
    out.reasons.push_back(o.reason);
    ++serial;
    return true;
  });
  return out;
}

Pattern render_pn(const BitSequence& b, int c, int m) {
  if (c < 2) throw OutOfRange("render_pn: cell size must be at least 2");
  if (b.bits.empty()) throw OutOfRange("render_pn: empty bit sequence");
  std::size_t len = b.bits.size();
  Pattern p = Pattern::filled(m, m, kWhite);
  static const ColorId boundary[4] = {kRed, kGreen, kBlack, kWhite};
  static const ColorId interior[4] = {kFuchsia, kBlue, kYellow, kAqua};
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x) {
      int r = (m - 1 - y) % c;  // row index from the north edge
      int cc = x % c;
      int row_bit = b.bits[r % len];
      int col_bit = b.bits[cc % len];
      int pair = (row_bit << 1) | col_bit;
      p.at(x, y) = (r == 0 || cc == 0) ? boundary[pair] : interior[pair];
    }
  return p;
}

CompiledSystem compile_pn_lift(const std::vector<int>& bits, int m) {
  const int k = static_cast<int>(bits.size());
  if (k > m) throw BadLength("bit sequence longer than the square");
  if (k < 2) throw BadLength("bit sequence must have at least 2 bits");
  BitSequence bs;
  bs.bits = bits;
  Pattern target = render_pn(bs, k, m);
  const std::string sym = "O(log n / log log n)";
  const long long cap = 140 + 2ll * k + 8 * ceil_log2(m + 1);

  SystemBuilder b(Dim::Barely3D, 2, default_palette());
  const int b0 = bits[0];
  const ColorId z0c = b0 ? kRed : kWhite;  // the boundary color p_n omits
  const int Y = m - k;

  auto bit_at = [&](int x) { return bits[x % k]; };
  auto flag_at = [&](int x) { return x % k == 0 ? 1 : 0; };
  auto bf = [&](int x) {
    return std::to_string(bit_at(x)) + (flag_at(x) ? "F" : "f");
  };
  // Vertical glue kind above cell (x, y) in the block (y = 0 is the seed
  // row): W = west column, D = wrap diagonal, E = east end, B = plain.
  auto vkind = [&](int x, int y) -> std::string {
    if (y == 0) return x == 0 ? "DW" : (x == k - 1 ? "E" : "B");
    if (x == 0) return "W";
    if (x == y) return "D";
    if (x == k + y - 1) return "E";
    return "B";
  };
  auto vglue = [&](int x, int y) {
    return g1("pl!v" + vkind(x, y) + "." + bf(x));
  };
  // Up glues of the top z=0 row.
  auto uglue = [&](int x) -> Glue {
    std::string payload = bf(x);
    if (x == 0) return g1("pl!uW." + payload);
    if (x == m - 1) return g2("pl!uL." + payload);
    if (x == 1) return g1("pl!u1." + payload);
    return g1("pl!u." + payload);
  };

  // --- Seed row (z=0): hard-coded encoding of b.
  for (int x = 0; x < k; ++x) {
    CellSpec c;
    c.color = z0c;
    if (x > 0) c.glue(Dir::W) = g2("pl!s" + std::to_string(x));
    if (x + 1 < k) c.glue(Dir::E) = g2("pl!s" + std::to_string(x + 1));
    if (Y > 0)
      c.glue(Dir::N) = vglue(x, 0);
    else
      c.glue(Dir::U) = uglue(x);
    if (x == 0 && Y > 0) c.glue(Dir::W) = g2("pl!ranchor");
    b.put({x, 0, 0}, c);
  }

  // --- Height ruler west of the seed row: per-row ticks drive the block's
  // rows; the top tick is distinct so the final block row lifts.
  if (Y > 0) {
    SegmentedPlan plan = segmented_plan(Y, {});
    SlabConfig cfg;
    cfg.ns = "pl.r";
    cfg.w_bits = plan.w_bits;
    cfg.u0 = plan.u0;
    cfg.arm_values = plan.arm_values;
    cfg.rows = plan.rows;
    cfg.color = [&](int, int) { return z0c; };
    cfg.hi_face = [&, Y](int r) -> Glue {
      if (r == 0) return Glue{};
      return g1(r == Y ? "pl!ticktop" : "pl!tick");
    };
    cfg.base_decor = [&](int u, CellSpec& c) {
      if (u == plan.w_bits + 1) c.glue(Dir::E) = g2("pl!ranchor");
    };
    int W_r = plan.w_bits + 2;
    emit_slab(b, Frame::north({-W_r, 0, 0}), cfg);
  }

  // --- The copy block: row y spans [0, k+y); the wrap bit rides from above
  // the diagonal to the new east cell, so the top row carries b periodically
  // across the full width m. Rows are driven one per ruler tick.
  for (int y = 1; y <= Y; ++y) {
    bool top = y == Y;
    std::string T = top ? "T" : "";
    std::string wrap = bf(y - 1);  // the wrap source is the diagonal below
    // Lateral boundary label between cells x-1 and x of this row.
    auto boundary = [&](int x) -> Glue {
      if (x == k + y - 1) return g2("pl!he" + T + "." + wrap);
      if (x == y) return g1("pl!h" + T + ".p." + wrap);
      if (x > y) return g1("pl!h" + T + ".w." + wrap);
      return g1("pl!h" + T + ".r");
    };
    for (int x = 0; x < k + y; ++x) {
      CellSpec c;
      c.color = z0c;
      if (x < k + y - 1) c.glue(Dir::S) = vglue(x, y - 1);
      if (top)
        c.glue(Dir::U) = uglue(x);
      else
        c.glue(Dir::N) = vglue(x, y);
      if (x == 0)
        c.glue(Dir::W) = g1(top ? "pl!ticktop" : "pl!tick");
      else
        c.glue(Dir::W) = boundary(x);
      if (x < k + y - 1) c.glue(Dir::E) = boundary(x + 1);
      b.put({x, y, 0}, c);
    }
  }

  // --- z=1: the lift row above the top z=0 row, then the grid growing
  // south along the diagonal.
  static const ColorId bpal[4] = {kRed, kGreen, kBlack, kWhite};
  static const ColorId ipal[4] = {kFuchsia, kBlue, kYellow, kAqua};
  auto zcolor = [&](int row_bit, int col_bit, bool boundary) {
    int pair = (row_bit << 1) | col_bit;
    return boundary ? bpal[pair] : ipal[pair];
  };
  auto zc = [&](int x) {
    return g1("pl!zc." + bf(x));
  };
  for (int x = 0; x < m; ++x) {
    CellSpec c;
    c.color = zcolor(b0, bit_at(x), true);
    c.glue(Dir::D) = uglue(x);
    if (x < m - 1) c.glue(Dir::E) = g1("pl!z1");
    if (x > 0) c.glue(Dir::W) = g1("pl!z1");
    if (x == 1)
      c.glue(Dir::S) = g2("pl!zdiag." + bf(x));
    else
      c.glue(Dir::S) = zc(x);
    b.put({x, Y, 1}, c);
  }
  for (int r = 1; r < m; ++r) {
    int w = bit_at(r), g = flag_at(r);  // row bit and boundary flag
    std::string rowp = std::to_string(w) + (g ? "F" : "f");
    for (int x = 0; x < m; ++x) {
      int u = bit_at(x), f = flag_at(x);
      CellSpec c;
      c.color = zcolor(w, u, f || g);
      if (x == r) {  // diagonal tile: the row bit is its column bit
        c.glue(Dir::N) = g2("pl!zdiag." + bf(x));
        c.glue(Dir::S) = zc(x);
        c.glue(Dir::E) = g1("pl!zrd." + rowp);
        c.glue(Dir::W) = g1("pl!zr." + rowp);
      } else if (x == r + 1) {  // east of the diagonal: marks the next one
        c.glue(Dir::N) = zc(x);
        c.glue(Dir::S) = g2("pl!zdiag." + bf(x));
        c.glue(Dir::W) = g1("pl!zrd." + rowp);
        c.glue(Dir::E) = g1("pl!zr." + rowp);
      } else {
        c.glue(Dir::N) = zc(x);
        c.glue(Dir::S) = zc(x);
        c.glue(Dir::E) = g1("pl!zr." + rowp);
        c.glue(Dir::W) = g1("pl!zr." + rowp);
      }
      b.put({x, Y - r, 1}, c);
    }
  }

  b.set_seed({0, 0, 0});
  if (b.target_pattern(1) != target)
    throw std::logic_error("pn_lift: painted z=1 plane mismatch");

  CompiledSystem cs{b.build("pl"), target, {sym, cap, 0}, {}, {}};
  cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
  cs.intended = b.intended_placements(cs.system);
  return cs;
}

}  // namespace tam
