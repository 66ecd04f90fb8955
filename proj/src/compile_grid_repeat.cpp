#include <cassert>
#include <functional>

#include "tam/compilers.hpp"
#include "tam/counters.hpp"
#include "tam/emit.hpp"
#include "tam/skeleton.hpp"

namespace tam {

namespace {

// Local frame for an instance copy; the south stack is the construction
// mirrored across the diagonal, so one painter serves both.
struct GFrame {
  Loc origin;
  bool transposed = false;
  Loc at(int lx, int ly) const {
    return transposed ? Loc{origin.x + ly, origin.y + lx, 0}
                      : Loc{origin.x + lx, origin.y + ly, 0};
  }
  Dir N() const { return transposed ? Dir::E : Dir::N; }
  Dir S() const { return transposed ? Dir::W : Dir::S; }
  Dir E() const { return transposed ? Dir::N : Dir::E; }
  Dir W() const { return transposed ? Dir::S : Dir::W; }
};

struct Interface {
  std::string count;  // <count>.<bitindex>.<bit> over the count columns
  std::string top;    // plain label east of the count block
  std::string next;   // strength-2 anchor on the top row's east cell
  bool empty() const { return count.empty(); }
};

struct InstanceCfg {
  std::string ns;  // role namespace; tiles shared across a role's instances
  GFrame frame;
  int n = 1;
  int wc = 1;  // count block width
  enum Mode { Seed, CountRead, Corner } mode = Seed;
  Interface read;          // consumed by CountRead bottom rows
  Interface emit;          // emitted on the top row when non-empty
  std::string east_face;   // strength-1 face on east-side cells
  std::string top_face;    // strength-1 face on top cells when emit is empty
  std::function<ColorId(int lx, int ly)> color;
  int value = 0;     // Seed/Corner: own count value; CountRead: predecessor's
  bool flag = false;  // Seed/Corner: final-instance flag
};

// Paints one instance copy: a hard-coded bottom row, count-bit columns on
// the west, skeleton-and-ribs machinery in the interior, a hard-coded east
// column and a top row that carries the handoff interface. The final
// instance of a stack is selected by an all-ones flag that travels bottom
// row -> MSB column -> top row.
void paint_instance(SystemBuilder& b, const InstanceCfg& cfg) {
  const int n = cfg.n;
  const int wc = cfg.wc;
  const GFrame& f = cfg.frame;
  auto P = cfg.color;
  auto bit_index = [&](int lx) { return wc - 1 - lx; };  // LSB east-most

  int value = cfg.value;
  bool flag = cfg.flag;
  if (cfg.mode == InstanceCfg::CountRead) {
    value = cfg.value + 1;
    flag = value == (1 << wc) - 1;
    if (value >= (1 << wc))
      throw std::logic_error("grid instance: count overflow");
  }
  std::vector<int> bits(wc);
  for (int i = 0; i < wc; ++i) bits[i] = (value >> i) & 1;

  auto col_glue = [&](int lx, int ly_above) {
    std::string l = cfg.ns + "!cb" + std::to_string(lx) + "." +
                    std::to_string(ly_above) + "." +
                    std::to_string(bits[bit_index(lx)]);
    if (lx == 0) l += flag ? "F" : "f";
    // The glue feeding the top row is strength 1 for all but the MSB
    // column: top-row tiles vary by flag and bit, so they must bind
    // cooperatively (chain + column) or via the flag-carrying MSB glue.
    int str = (ly_above == n - 1 && lx != 0) ? 1 : 2;
    return Glue{l, str};
  };
  // Top-row chain strength: cooperative (1) across the count block, alone-
  // sufficient (2) east of it where no column bond exists.
  auto top_chain = [&](int boundary_x, const std::string& fl) {
    return Glue{cfg.ns + "!t" + std::to_string(boundary_x) + fl,
                boundary_x < wc ? 1 : 2};
  };
  // Westward-carry state crossing between bottom cells x-1 and x: the state
  // after processing count cells [x, wc).
  auto chain_label = [&](int x) {
    std::string s;
    if (x >= wc)
      s = "pre";
    else {
      int cr = 1, on = 1;
      for (int i = 0; i < wc - x; ++i) {
        int pb = (cfg.value >> i) & 1;
        int nb = pb ^ cr;
        cr = pb & cr;
        on &= nb;
      }
      s = "c" + std::to_string(cr) + "o" + std::to_string(on);
    }
    return cfg.ns + "!kb" + std::to_string(x) + "." + s;
  };

  // --- Bottom row.
  for (int lx = 0; lx < n; ++lx) {
    CellSpec c;
    c.color = P(lx, 0);
    switch (cfg.mode) {
      case InstanceCfg::CountRead:
        if (lx == n - 1)
          c.glue(f.S()) = g2(cfg.read.next);
        else if (lx >= wc)
          c.glue(f.S()) = g1(cfg.read.top);
        else
          c.glue(f.S()) =
              g1(cfg.read.count + "." + std::to_string(bit_index(lx)) + "." +
                 std::to_string((cfg.value >> bit_index(lx)) & 1));
        if (lx < n - 1) c.glue(f.E()) = g1(chain_label(lx + 1));
        if (lx > 0) c.glue(f.W()) = g1(chain_label(lx));
        break;
      case InstanceCfg::Corner:
        if (lx == 0) {
          c.glue(f.S()) = g1("gr!ntop");
          c.glue(f.W()) = g1("gr!efac");
        }
        if (lx > 0) c.glue(f.W()) = g2(cfg.ns + "!b" + std::to_string(lx));
        if (lx < n - 1)
          c.glue(f.E()) = g2(cfg.ns + "!b" + std::to_string(lx + 1));
        break;
      case InstanceCfg::Seed:
        if (lx > 0) c.glue(f.W()) = g2(cfg.ns + "!b" + std::to_string(lx));
        if (lx < n - 1)
          c.glue(f.E()) = g2(cfg.ns + "!b" + std::to_string(lx + 1));
        break;
    }
    if (n > 1) {
      if (lx < wc) c.glue(f.N()) = col_glue(lx, 1);
      if (lx == n - 1) {
        c.glue(f.N()) = Glue{cfg.ns + "!ec1", n == 2 ? 1 : 2};
        if (!cfg.east_face.empty() && c.glue(f.E()).is_null())
          c.glue(f.E()) = g1(cfg.east_face);
      }
    }
    b.put(f.at(lx, 0), c);
  }
  if (n == 1) return;

  // --- Count columns.
  for (int lx = 0; lx < wc; ++lx)
    for (int ly = 1; ly <= n - 2; ++ly) {
      CellSpec c;
      c.color = P(lx, ly);
      c.glue(f.S()) = col_glue(lx, ly);
      c.glue(f.N()) = col_glue(lx, ly + 1);
      b.put(f.at(lx, ly), c);
    }

  // --- Interior machinery.
  const int mx0 = wc;
  const int mwidth = (n - 1) - mx0;
  if (mwidth >= 1 && n - 2 >= 1) {
    SkeletonSpec spec;
    spec.ns = cfg.ns + ".m";
    spec.x0 = mx0;
    spec.y0 = 0;
    spec.width = mwidth;
    spec.rows = n - 2;
    spec.lam = std::max(1, floor_log2(n));
    spec.strength = 2;
    spec.color = [&](int lx, int ly) { return P(lx, ly); };
    spec.emit_families = false;
    SystemBuilder tmp(Dim::D2, 2);
    SkeletonOut sk = emit_skeleton(tmp, spec);
    for (const auto& [loc, cell] : tmp.cells()) {
      CellSpec c;
      c.color = cell.color;
      c.glue(f.N()) = cell.glue(Dir::N);
      c.glue(f.S()) = cell.glue(Dir::S);
      c.glue(f.E()) = cell.glue(Dir::E);
      c.glue(f.W()) = cell.glue(Dir::W);
      b.put(f.at(loc.x, loc.y), c);
    }
    for (const auto& [lx, gl] : sk.base_anchors)
      b.decorate(f.at(lx, 0), f.N(), gl);
  }

  // --- East column. The glue feeding the top row is strength 1; the
  // top-row corner binds through its flag-carrying chain instead.
  for (int ly = 1; ly <= n - 2; ++ly) {
    CellSpec c;
    c.color = P(n - 1, ly);
    c.glue(f.S()) = g2(cfg.ns + "!ec" + std::to_string(ly));
    c.glue(f.N()) =
        Glue{cfg.ns + "!ec" + std::to_string(ly + 1), ly == n - 2 ? 1 : 2};
    if (!cfg.east_face.empty()) c.glue(f.E()) = g1(cfg.east_face);
    b.put(f.at(n - 1, ly), c);
  }

  // --- Top row (grows west to east from the MSB column's top).
  std::string fl = flag ? "F" : "f";
  for (int lx = 0; lx < n; ++lx) {
    CellSpec c;
    c.color = P(lx, n - 1);
    if (lx < wc)
      c.glue(f.S()) = col_glue(lx, n - 1);
    else if (lx == n - 1)
      c.glue(f.S()) = Glue{cfg.ns + "!ec" + std::to_string(n - 1), 1};
    if (lx > 0) c.glue(f.W()) = top_chain(lx, fl);
    if (lx < n - 1) c.glue(f.E()) = top_chain(lx + 1, fl);
    if (!flag) {
      if (!cfg.emit.empty()) {
        if (lx < wc)
          c.glue(f.N()) = g1(cfg.emit.count + "." +
                             std::to_string(bit_index(lx)) + "." +
                             std::to_string(bits[bit_index(lx)]));
        else if (lx == n - 1)
          c.glue(f.N()) = g2(cfg.emit.next);
        else
          c.glue(f.N()) = g1(cfg.emit.top);
      } else if (!cfg.top_face.empty()) {
        c.glue(f.N()) = g1(cfg.top_face);
      }
    }
    if (lx == n - 1 && !cfg.east_face.empty())
      c.glue(f.E()) = g1(cfg.east_face);
    b.put(f.at(lx, n - 1), c);
  }
}

}  // namespace

CompiledSystem compile_grid_repeat(const Pattern& p, int m) {
  if (p.width != p.height) throw NotSquare("pattern is not square");
  for (ColorId c : p.grid)
    if (c != kWhite && c != kBlack)
      throw NotTwoColored("pattern uses colors beyond White/Black");
  if (m < 1) throw OutOfRange("grid_repeat: m must be positive");
  const int n = p.width;
  Pattern target = grid_repeat(p, m);
  const std::string sym = "O(n^2/log n + log nm)";
  const long long cap =
      24ll * n * n / std::max(1, ceil_log2(std::max(2, n))) +
      40ll * ceil_log2(std::max(2, n * m)) + 420;

  const int wc = std::max(1, ceil_log2(m));
  if (m > 1 && (n < 3 || wc > n - 1)) {
    // The count interface cannot cross an instance this small; compile the
    // expanded pattern as a single square construction instead.
    CompiledSystem cs = compile_square_pattern(target);
    cs.budget = {sym, cap, cs.budget.actual};
    return cs;
  }

  SystemBuilder b(Dim::D2, 2);
  auto pat = [&](int lx, int ly) { return p.at(lx, ly); };
  auto pat_t = [&](int lx, int ly) { return p.at(ly, lx); };
  const int v0 = (1 << wc) - m;

  Interface vI{"gr!vc", "gr!vtop", "gr!vnext"};
  Interface hI{"gr!hc", "gr!htop", "gr!hnext"};

  InstanceCfg seed;
  seed.ns = "gs";
  seed.frame = {{0, 0, 0}, false};
  seed.n = n;
  seed.wc = wc;
  seed.mode = InstanceCfg::Seed;
  seed.color = pat;
  seed.value = v0;
  seed.flag = m == 1;
  if (m > 1) seed.emit = vI;
  paint_instance(b, seed);
  b.set_seed({0, 0, 0});

  if (m > 1) {
    // The seed's east side doubles as the south stack's first interface.
    auto h_count_glue = [&](int y) {
      int idx = wc - 1 - y;
      return g1(hI.count + "." + std::to_string(idx) + "." +
                std::to_string((v0 >> idx) & 1));
    };
    for (int y = 0; y < n - 1; ++y)
      b.decorate({n - 1, y, 0}, Dir::E,
                  y < wc ? h_count_glue(y) : g1(hI.top));
    b.decorate({n - 1, n - 1, 0}, Dir::E, g2(hI.next));

    for (int k = 1; k < m; ++k) {
      InstanceCfg st;
      st.n = n;
      st.wc = wc;
      st.mode = InstanceCfg::CountRead;
      st.value = v0 + k - 1;  // predecessor's value
      // West stack.
      st.ns = "gv";
      st.frame = {{0, k * n, 0}, false};
      st.read = st.emit = vI;
      st.east_face = "gr!efac";
      st.color = pat;
      paint_instance(b, st);
      // South stack, transposed: its local east column is the world north
      // row, so it carries the fill-facing label.
      st.ns = "gt";
      st.frame = {{k * n, 0, 0}, true};
      st.read = st.emit = hI;
      st.east_face = "gr!ntop";
      st.color = pat_t;
      paint_instance(b, st);
    }
    for (int a = 1; a < m; ++a)
      for (int bb = 1; bb < m; ++bb) {
        InstanceCfg fi;
        fi.ns = "gf";
        fi.frame = {{a * n, bb * n, 0}, false};
        fi.n = n;
        fi.wc = wc;
        fi.mode = InstanceCfg::Corner;
        fi.top_face = "gr!ntop";
        fi.east_face = "gr!efac";
        fi.color = pat;
        fi.value = (1 << wc) - 1;
        fi.flag = false;
        paint_instance(b, fi);
      }
  }

  if (b.target_pattern() != target)
    throw std::logic_error("grid_repeat: painted region mismatch");
  CompiledSystem cs{b.build("gr"), target, {sym, cap, 0}, {}, {}};
  cs.budget.actual = static_cast<long long>(cs.system.tileset.tiles.size());
  cs.intended = b.intended_placements(cs.system);
  cs.stats["count_width"] = wc;
  return cs;
}

}  // namespace tam
