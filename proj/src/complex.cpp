#include "secant/complex.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>

#include "secant/errors.hpp"

namespace secant {

namespace {

constexpr std::string_view kSymbols = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

int point_index(const GridPoint& p, int b) { return (p.row - 1) * 2 * b + (p.col - 1); }

void check_h(const SegreParams& params, int h) {
  if (h < 1 || h > params.b)
    throw ValidationError("h must satisfy 1 <= h <= b (got h=" + std::to_string(h) +
                          ", b=" + std::to_string(params.b) + ")");
}

}  // namespace

std::vector<int> Facet::h_tuple() const {
  std::vector<int> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(p.h);
  return out;
}

std::vector<Path> enumerate_paths(const SegreParams& params, int h) {
  params.validate();
  check_h(params, h);
  const int a = params.a;
  const int b = params.b;
  std::vector<Path> out;
  Path cur;
  cur.h = h;
  auto walk = [&](auto&& self, int r, int c) -> void {
    const GridPoint p{r, c};
    cur.points.push_back(p);
    cur.mask.set(point_index(p, b));
    if (r == a && c == h) {
      out.push_back(cur);
    } else {
      if (c - 1 >= h) self(self, r, c - 1);  // left first: lexicographically smaller
      if (r + 1 <= a) self(self, r + 1, c);
    }
    cur.mask.reset(point_index(p, b));
    cur.points.pop_back();
  };
  walk(walk, 1, b + h);
  return out;
}

std::vector<std::vector<Path>> enumerate_all_paths(const SegreParams& params) {
  std::vector<std::vector<Path>> out(static_cast<std::size_t>(params.b) + 1);
  for (int h = 1; h <= params.b; ++h) out[static_cast<std::size_t>(h)] = enumerate_paths(params, h);
  return out;
}

bool is_path(const SegreParams& params, const std::vector<GridPoint>& p) {
  if (static_cast<int>(p.size()) != params.a + params.b) return false;
  const GridPoint& s = p.front();
  const GridPoint& e = p.back();
  if (s.row != 1 || e.row != params.a || s.col != params.b + e.col) return false;
  if (e.col < 1 || e.col > params.b) return false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const int dr = p[i].row - p[i - 1].row;
    const int dc = p[i].col - p[i - 1].col;
    if (!((dr == 1 && dc == 0) || (dr == 0 && dc == -1))) return false;
  }
  return true;
}

std::vector<std::vector<int>> h_tuples(int b, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == t) {
      out.push_back(cur);
      return;
    }
    for (int h = from; h <= b - (t - static_cast<int>(cur.size())) + 1; ++h) {
      cur.push_back(h);
      self(self, h + 1);
      cur.pop_back();
    }
  };
  if (t >= 1) rec(rec, 1);
  return out;
}

namespace {

void stream_tuple(const std::vector<std::vector<Path>>& paths, const std::vector<int>& hs,
                  const FacetVisitor& visit) {
  Facet f;
  f.paths.reserve(hs.size());
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == hs.size()) {
      visit(f);
      return;
    }
    for (const Path& p : paths[static_cast<std::size_t>(hs[depth])]) {
      if (p.mask.intersects(f.points)) continue;
      f.paths.push_back(p);
      f.points |= p.mask;
      self(self, depth + 1);
      f.points -= p.mask;
      f.paths.pop_back();
    }
  };
  rec(rec, 0);
}

void check_tuple(const SegreParams& params, const std::vector<int>& hs) {
  if (static_cast<int>(hs.size()) != params.secant())
    throw ValidationError("h-tuple length must equal t");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    check_h(params, hs[i]);
    if (i > 0 && hs[i] <= hs[i - 1])
      throw ValidationError("h-tuple must be strictly increasing without duplicates");
  }
}

}  // namespace

void enumerate_facets(const SegreParams& params, const FacetVisitor& visit) {
  params.require_secant_regime();
  const auto paths = enumerate_all_paths(params);
  for (const auto& hs : h_tuples(params.b, params.secant())) stream_tuple(paths, hs, visit);
}

void enumerate_facets_for(const SegreParams& params, const std::vector<int>& h_tuple,
                          const FacetVisitor& visit) {
  params.require_secant_regime();
  check_tuple(params, h_tuple);
  const auto paths = enumerate_all_paths(params);
  stream_tuple(paths, h_tuple, visit);
}

std::uint64_t count_facet_tuples(const SegreParams& params) {
  std::uint64_t n = 0;
  enumerate_facets(params, [&](const Facet&) { ++n; });
  return n;
}

bool is_facet(const Poset& poset, const PointSet& s, int t) {
  return s.count() == (poset.a() + poset.b()) * t && poset.longest_chain(s) <= t;
}

bool is_facet(const PointSet& s, const SegreParams& params) {
  params.validate();
  return is_facet(Poset(params), s, params.secant());
}

FacetDecomposition decompose_facet(const PointSet& s, const SegreParams& params) {
  params.require_secant_regime();
  const Poset poset(params);
  const int t = params.secant();
  if (!is_facet(poset, s, t)) throw ValidationError("decompose_facet: input is not a facet");
  const int a = params.a;
  const int b = params.b;

  FacetDecomposition result;
  std::vector<Path> chosen;
  PointSet used;

  // Paths from (1, b+h) to (a, h) that stay inside `allowed`.
  auto paths_within = [&](int h, const PointSet& allowed) {
    std::vector<Path> out;
    Path cur;
    cur.h = h;
    auto walk = [&](auto&& self, int r, int c) -> void {
      const int idx = point_index({r, c}, b);
      if (!allowed.test(idx)) return;
      cur.points.push_back({r, c});
      cur.mask.set(idx);
      if (r == a && c == h) {
        out.push_back(cur);
      } else {
        if (c - 1 >= h) self(self, r, c - 1);
        if (r + 1 <= a) self(self, r + 1, c);
      }
      cur.mask.reset(idx);
      cur.points.pop_back();
    };
    walk(walk, 1, b + h);
    return out;
  };

  auto rec = [&](auto&& self, int min_h) -> void {
    if (static_cast<int>(chosen.size()) == t) {
      if (used == s) {
        if (result.count == 0) result.paths = chosen;
        ++result.count;
      }
      return;
    }
    const PointSet remaining = s - used;
    for (int h = min_h; h <= b; ++h) {
      if (!remaining.test(point_index({1, b + h}, b)) || !remaining.test(point_index({a, h}, b)))
        continue;
      for (Path& p : paths_within(h, remaining)) {
        used |= p.mask;
        chosen.push_back(std::move(p));
        self(self, h + 1);
        used -= chosen.back().mask;
        chosen.pop_back();
      }
    }
  };
  rec(rec, 1);
  return result;
}

Facet make_facet(std::vector<Path> paths) {
  std::sort(paths.begin(), paths.end(), [](const Path& l, const Path& r) { return l.h < r.h; });
  Facet f;
  for (auto& p : paths) {
    if (p.mask.intersects(f.points)) throw ValidationError("facet paths must be vertex-disjoint");
    f.points |= p.mask;
  }
  for (std::size_t i = 1; i < paths.size(); ++i)
    if (paths[i].h == paths[i - 1].h) throw ValidationError("facet paths must have distinct h");
  f.paths = std::move(paths);
  return f;
}

std::string render_p_prime(const Facet& facet, const SegreParams& params) {
  params.validate();
  const int a = params.a;
  const int b = params.b;
  if (facet.paths.size() > kSymbols.size()) throw ValidationError("too many paths to render");
  std::vector<std::string> grid(static_cast<std::size_t>(2 * a));
  for (int r = 0; r < a; ++r) grid[static_cast<std::size_t>(r)] = std::string(static_cast<std::size_t>(2 * b), '.');
  for (int r = a; r < 2 * a; ++r) grid[static_cast<std::size_t>(r)] = std::string(static_cast<std::size_t>(b), '.');
  for (std::size_t k = 0; k < facet.paths.size(); ++k) {
    for (const auto& p : facet.paths[k].points) {
      if (p.row < 1 || p.row > a || p.col < 1 || p.col > 2 * b)
        throw ValidationError("facet point outside P");
      grid[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col - 1)] = kSymbols[k];
      if (p.col > b)
        grid[static_cast<std::size_t>(a + p.row - 1)][static_cast<std::size_t>(p.col - b - 1)] = kSymbols[k];
    }
  }
  std::string out;
  for (const auto& line : grid) {
    out += line;
    out += '\n';
  }
  return out;
}

Facet parse_p_prime(const std::string& text, SegreParams& params_out) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty() || lines.size() % 2 != 0) throw ValidationError("P' picture needs 2a non-empty rows");
  const int a = static_cast<int>(lines.size() / 2);
  const int b = static_cast<int>(lines.back().size());
  for (int r = 0; r < a; ++r)
    if (static_cast<int>(lines[static_cast<std::size_t>(r)].size()) != 2 * b)
      throw ValidationError("upper rows of the P' picture must have 2b cells");
  for (int r = a; r < 2 * a; ++r)
    if (static_cast<int>(lines[static_cast<std::size_t>(r)].size()) != b)
      throw ValidationError("lower rows of the P' picture must have b cells");

  SegreParams params{a, b, std::nullopt};
  params.validate();

  std::vector<std::vector<GridPoint>> by_symbol(kSymbols.size());
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c < 2 * b; ++c) {
      const char ch = lines[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (ch == '.') continue;
      const auto k = kSymbols.find(ch);
      if (k == std::string_view::npos) throw ValidationError(std::string("unknown symbol '") + ch + "'");
      by_symbol[k].push_back({r + 1, c + 1});
      if (c >= b && lines[static_cast<std::size_t>(a + r)][static_cast<std::size_t>(c - b)] != ch)
        throw ValidationError("lower block of the P' picture disagrees with the second slice");
    }
  }
  for (int r = a; r < 2 * a; ++r)
    for (int c = 0; c < b; ++c) {
      const char ch = lines[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (ch != lines[static_cast<std::size_t>(r - a)][static_cast<std::size_t>(c + b)])
        throw ValidationError("lower block of the P' picture disagrees with the second slice");
    }

  std::vector<Path> paths;
  for (auto& pts : by_symbol) {
    if (pts.empty()) continue;
    std::sort(pts.begin(), pts.end(), [](const GridPoint& l, const GridPoint& r) {
      return l.row != r.row ? l.row < r.row : l.col > r.col;
    });
    if (!is_path(params, pts)) throw ValidationError("P' picture contains a cell set that is not a path");
    Path p;
    p.h = pts.back().col;
    for (const auto& q : pts) p.mask.set(point_index(q, b));
    p.points = std::move(pts);
    paths.push_back(std::move(p));
  }
  params.t = static_cast<int>(paths.size());
  params_out = params;
  return make_facet(std::move(paths));
}

nlohmann::json facet_to_json(const Facet& facet) {
  nlohmann::json j;
  j["h"] = facet.h_tuple();
  auto paths = nlohmann::json::array();
  for (const auto& p : facet.paths) {
    auto pts = nlohmann::json::array();
    for (const auto& q : p.points) pts.push_back({q.row, q.col});
    paths.push_back(std::move(pts));
  }
  j["paths"] = std::move(paths);
  return j;
}

Facet facet_from_json(const nlohmann::json& j, const SegreParams& params) {
  params.validate();
  std::vector<Path> paths;
  for (const auto& jp : j.at("paths")) {
    Path p;
    for (const auto& q : jp) {
      GridPoint g{q.at(0).get<int>(), q.at(1).get<int>()};
      p.points.push_back(g);
    }
    if (!is_path(params, p.points)) throw ValidationError("JSON facet contains an invalid path");
    for (const auto& q : p.points) p.mask.set(point_index(q, params.b));
    p.h = p.points.back().col;
    paths.push_back(std::move(p));
  }
  Facet f = make_facet(std::move(paths));
  if (j.contains("h") && j.at("h").get<std::vector<int>>() != f.h_tuple())
    throw ValidationError("JSON facet h-tuple does not match its paths");
  return f;
}

}  // namespace secant
