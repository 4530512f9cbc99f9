#include "besovrates/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "besovrates/errors.hpp"

namespace besovrates {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw io_error("cannot write " + path);
  return out;
}

}  // namespace

void write_errors_csv(const std::string& path,
                      const std::vector<ErrorRow>& rows,
                      const RunConfig& cfg) {
  auto out = open_out(path);
  out << "# besov-rates " << kVersion << " config=" << config_hash(cfg)
      << '\n';
  out << "seed,n,t,theta,norm_value\n";
  for (const ErrorRow& r : rows) {
    out << r.seed << ',' << r.n << ',' << format_double(r.t) << ','
        << r.theta << ',' << format_double(r.value) << '\n';
  }
  if (!out) throw io_error("failed writing " + path);
}

void write_report_json(const std::string& path, const RunConfig& cfg,
                       const nlohmann::json& body) {
  nlohmann::json doc = body;
  doc["schema"] = 1;
  doc["version"] = kVersion;
  doc["config_hash"] = config_hash(cfg);
  doc["config"] = nlohmann::json::parse(canonical_dump(cfg));
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
  if (!out) throw io_error("failed writing " + path);
}

namespace {

std::string svg_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return std::string(buf);
}

const char* kPalette[] = {"#1c6fb8", "#c23b22", "#2e8b57",
                          "#8b5fbf", "#b8860b", "#444444"};

}  // namespace

void write_rates_svg(const std::string& path,
                     const std::vector<RateSeries>& series,
                     const RunConfig& cfg) {
  // plot window in user units
  const double w = 640, ht = 480;
  const double ml = 70, mr = 200, mt = 30, mb = 55;
  const double pw = w - ml - mr, ph = ht - mt - mb;

  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      if (!(p.n > 0.0) || !(p.error > 0.0)) {
        throw config_error("write_rates_svg: points must be positive");
      }
      xlo = std::min(xlo, std::log10(p.n));
      xhi = std::max(xhi, std::log10(p.n));
      ylo = std::min(ylo, std::log10(p.error));
      yhi = std::max(yhi, std::log10(p.error));
    }
  }
  if (xhi < xlo) throw config_error("write_rates_svg: no points");
  if (xhi - xlo < 1e-9) xhi = xlo + 1.0;
  if (yhi - ylo < 1e-9) yhi = ylo + 1.0;
  const double xpad = 0.04 * (xhi - xlo), ypad = 0.08 * (yhi - ylo);
  xlo -= xpad;
  xhi += xpad;
  ylo -= ypad;
  yhi += ypad;

  auto px = [&](double lx) { return ml + (lx - xlo) / (xhi - xlo) * pw; };
  auto py = [&](double ly) { return mt + (yhi - ly) / (yhi - ylo) * ph; };

  auto out = open_out(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << ht << "\" viewBox=\"0 0 " << w << " " << ht
      << "\">\n";
  out << "<!-- besov-rates " << kVersion << " config=" << config_hash(cfg)
      << " -->\n";
  out << "<rect width=\"" << w << "\" height=\"" << ht
      << "\" fill=\"white\"/>\n";
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
      << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";

  // x ticks at powers of two, y ticks at powers of ten
  const double lg2 = std::log10(2.0);
  for (int e = int(std::ceil(xlo / lg2)); e * lg2 <= xhi; ++e) {
    const double x = px(e * lg2);
    out << "<line x1=\"" << svg_num(x) << "\" y1=\"" << mt + ph
        << "\" x2=\"" << svg_num(x) << "\" y2=\"" << mt + ph + 5
        << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << svg_num(x) << "\" y=\"" << mt + ph + 20
        << "\" font-size=\"12\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\">"
        << (1LL << e) << "</text>\n";
  }
  for (int e = int(std::ceil(ylo)); e <= int(std::floor(yhi)); ++e) {
    const double y = py(double(e));
    out << "<line x1=\"" << ml - 5 << "\" y1=\"" << svg_num(y) << "\" x2=\""
        << ml << "\" y2=\"" << svg_num(y) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << ml - 9 << "\" y=\"" << svg_num(y + 4)
        << "\" font-size=\"12\" text-anchor=\"end\" "
           "font-family=\"sans-serif\">1e" << e << "</text>\n";
  }
  out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << ht - 12
      << "\" font-size=\"13\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\">n</text>\n";
  out << "<text x=\"18\" y=\"" << mt + ph / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" transform=\"rotate(-90 18 "
      << mt + ph / 2 << ")\">error</text>\n";

  const double ln10 = std::log(10.0);
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % 6];
    // fitted guide line across the data range
    const double la = xlo + xpad, lb = xhi - xpad;
    const double ya = (s.intercept + s.slope * la * ln10) / ln10;
    const double yb = (s.intercept + s.slope * lb * ln10) / ln10;
    out << "<line x1=\"" << svg_num(px(la)) << "\" y1=\"" << svg_num(py(ya))
        << "\" x2=\"" << svg_num(px(lb)) << "\" y2=\"" << svg_num(py(yb))
        << "\" stroke=\"" << color
        << "\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";
    for (const auto& p : s.points) {
      out << "<circle cx=\"" << svg_num(px(std::log10(p.n))) << "\" cy=\""
          << svg_num(py(std::log10(p.error))) << "\" r=\"3.5\" fill=\""
          << color << "\"/>\n";
    }
    const double ly = mt + 18 + 20 * double(si);
    out << "<circle cx=\"" << w - mr + 14 << "\" cy=\"" << svg_num(ly - 4)
        << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
    char slope_buf[32];
    std::snprintf(slope_buf, sizeof(slope_buf), "%.3f", s.slope);
    out << "<text x=\"" << w - mr + 26 << "\" y=\"" << svg_num(ly)
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.label
        << " (slope " << slope_buf << ")</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw io_error("failed writing " + path);
}

void write_provenance(const std::string& path, const RunConfig& cfg) {
  auto out = open_out(path);
  out << "tool: besov-rates " << kVersion << '\n';
  out << "mode: " << cfg.mode << '\n';
  out << "config: " << config_hash(cfg) << '\n';
  out << "base_seed: " << cfg.base_seed << '\n';
  out << "seeds: " << cfg.seeds << '\n';
  if (!out) throw io_error("failed writing " + path);
}

void write_snapshot_csv(const std::string& path, const GridFunction& f) {
  auto out = open_out(path);
  out << "x,value\n";
  for (int i = 0; i < f.grid.points(); ++i) {
    out << format_double(f.grid.point(i)) << ',' << format_double(f.v[i])
        << '\n';
  }
  if (!out) throw io_error("failed writing " + path);
}

namespace {

void put_u32(std::ofstream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = (v >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ofstream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = (bits >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::ifstream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(b[i]) << (8 * i);
  return v;
}

double get_f64(std::ifstream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void write_state_dump(const std::string& path, const PathRecord& rec) {
  auto out = open_out(path, true);
  out.write("BSRT", 4);
  put_u32(out, 1u);
  put_u32(out, std::uint32_t(rec.grid.n));
  put_u32(out, std::uint32_t(rec.states.size()));
  for (std::size_t i = 0; i < rec.states.size(); ++i) {
    put_f64(out, rec.grid.time_of(rec.checkpoint_steps[i]));
    for (double v : rec.states[i].v) put_f64(out, v);
  }
  if (!out) throw io_error("failed writing " + path);
}

StateDump read_state_dump(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "BSRT", 4) != 0) {
    throw io_error("bad magic in " + path);
  }
  const std::uint32_t version = get_u32(in);
  if (version != 1u) throw io_error("unsupported dump version");
  StateDump dump;
  dump.n = int(get_u32(in));
  const std::uint32_t count = get_u32(in);
  dump.times.resize(count);
  dump.states.assign(count, std::vector<double>(2 * dump.n));
  for (std::uint32_t i = 0; i < count; ++i) {
    dump.times[i] = get_f64(in);
    for (double& v : dump.states[i]) v = get_f64(in);
  }
  if (!in) throw io_error("truncated dump " + path);
  return dump;
}

}  // namespace besovrates
