#include "io.hpp"

#include "xideform/deform.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace xideform::cli {

std::string fmt_d(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_d(const std::string& raw) {
  // from_chars takes no leading '+'
  std::string text = (!raw.empty() && raw[0] == '+') ? raw.substr(1) : raw;
  double v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw ConfigError("cannot parse number: " + text);
  return v;
}

}  // namespace

CxD parse_cx(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ConfigError("empty complex literal");
  auto part = [](std::string p) {
    if (p.empty() || p == "+") return 1.0;
    if (p == "-") return -1.0;
    return parse_d(p);
  };
  if (s.back() != 'i') return {parse_d(s), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
      split = k;
  if (split == std::string::npos) return {0.0, part(s)};
  return {parse_d(s.substr(0, split)), part(s.substr(split))};
}

std::pair<double, double> parse_range(const std::string& text) {
  std::size_t c = text.find(':');
  if (c == std::string::npos)
    throw ConfigError("range must be lo:hi, got " + text);
  double lo = parse_d(text.substr(0, c));
  double hi = parse_d(text.substr(c + 1));
  if (!(lo < hi)) throw ConfigError("range must have lo < hi: " + text);
  return {lo, hi};
}

std::string cache_dir() {
  if (const char* env = std::getenv("XIDEFORM_CACHE_DIR")) return env;
  return ".xideform-cache";
}

namespace {

std::string key_text(const CacheKey& key) {
  std::ostringstream os;
  os << key.kind << '|' << key.spec_hash << '|' << fmt_d(key.t) << '|'
     << fmt_d(key.region.x_lo) << '|' << fmt_d(key.region.x_hi) << '|'
     << fmt_d(key.region.y_lo) << '|' << fmt_d(key.region.y_hi) << '|'
     << key.working_digits << '|' << key.target;
  return os.str();
}

std::string key_path(const CacheKey& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key_text(key)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h << ".json";
  return (fs::path(cache_dir()) / os.str()).string();
}

json zero_to_json(const ZeroRecord& z) {
  return json{{"re", z.center.re},
              {"im", z.center.im},
              {"residual", z.residual},
              {"newton_steps", z.newton_steps},
              {"method", z.method},
              {"converged", z.converged}};
}

ZeroRecord zero_from_json(const json& j) {
  ZeroRecord z;
  z.center = {j.at("re").get<double>(), j.at("im").get<double>()};
  z.residual = j.at("residual").get<double>();
  z.newton_steps = j.at("newton_steps").get<int>();
  z.method = j.at("method").get<std::string>();
  z.converged = j.at("converged").get<bool>();
  return z;
}

}  // namespace

bool cache_load(const CacheKey& key, std::vector<ZeroRecord>* zeros) {
  std::ifstream in(key_path(key));
  if (!in) return false;
  json j;
  try {
    in >> j;
    if (j.at("tool_version").get<std::string>() != kToolVersion) return false;
    if (j.at("key").get<std::string>() != key_text(key)) return false;
    zeros->clear();
    for (const json& z : j.at("zeros")) zeros->push_back(zero_from_json(z));
  } catch (const json::exception&) {
    return false;
  }
  return true;
}

void cache_store(const CacheKey& key, const std::vector<ZeroRecord>& zeros) {
  json j;
  j["tool_version"] = kToolVersion;
  j["key"] = key_text(key);
  j["kind"] = key.kind;
  j["spec_hash"] = key.spec_hash;
  j["t"] = key.t;
  j["region"] = {key.region.x_lo, key.region.x_hi, key.region.y_lo,
                 key.region.y_hi};
  j["working_digits"] = key.working_digits;
  j["target"] = key.target;
  j["zeros"] = json::array();
  for (const ZeroRecord& z : zeros) j["zeros"].push_back(zero_to_json(z));
  atomic_write(key_path(key), j.dump(2) + "\n");
}

void atomic_write(const std::string& path, const std::string& content) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, p);
}

std::string zeros_csv(const std::vector<ZeroRecord>& zeros) {
  std::string out = "re,im,residual,method\n";
  for (const ZeroRecord& z : zeros)
    out += fmt_d(z.center.re) + "," + fmt_d(z.center.im) + "," +
           fmt_d(z.residual) + "," + z.method + "\n";
  return out;
}

std::string pairs_csv(const std::vector<PairedZero>& pairs) {
  std::string out = "series_re,series_im,xi_re,xi_im,distance,matched\n";
  for (const PairedZero& p : pairs)
    out += fmt_d(p.series_zero.center.re) + "," +
           fmt_d(p.series_zero.center.im) + "," + fmt_d(p.xi_zero_preimage.re) +
           "," + fmt_d(p.xi_zero_preimage.im) + "," + fmt_d(p.distance) + "," +
           (p.matched ? "true" : "false") + "\n";
  return out;
}

std::string certificate_json(const LFunctionSpec& spec, double t,
                             const CertifiedZero& cert,
                             const PrecisionConfig& prec) {
  json j;
  j["disk_center"] = {cert.disk_center.re, cert.disk_center.im};
  j["disk_radius"] = cert.disk_radius;
  j["delta"] = cert.delta;
  j["sup_residual"] = cert.sup_residual;
  j["claim"] = cert.claim;
  j["series_zero"] = {cert.series_zero.re, cert.series_zero.im};
  j["circle_radius"] = cert.circle_radius;
  j["off_line"] = cert.disk_center.re - 0.5 >= cert.disk_radius;
  j["provenance"] = {{"spec", spec.name},
                     {"spec_hash", spec_hash(spec)},
                     {"t", t},
                     {"tool_version", kToolVersion},
                     {"working_digits", prec.working_digits},
                     {"target_abs_err", fmt_d(static_cast<double>(
                                            prec.target_abs_err))}};
  return j.dump(2) + "\n";
}

namespace {

struct Panel {
  double x0, x1, y0, y1;        // data bounds
  double sx0, sx1, sy0, sy1;    // screen box
  double px(double x) const { return sx0 + (x - x0) / (x1 - x0) * (sx1 - sx0); }
  double py(double y) const { return sy1 - (y - y0) / (y1 - y0) * (sy1 - sy0); }
};

void panel_frame(std::string& svg, const Panel& p, const std::string& title) {
  std::ostringstream os;
  os << "<rect x=\"" << fmt_d(p.sx0) << "\" y=\"" << fmt_d(p.sy0)
     << "\" width=\"" << fmt_d(p.sx1 - p.sx0) << "\" height=\""
     << fmt_d(p.sy1 - p.sy0)
     << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1\"/>\n"
     << "<text x=\"" << fmt_d((p.sx0 + p.sx1) / 2) << "\" y=\""
     << fmt_d(p.sy0 - 10)
     << "\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
  svg += os.str();
}

void dot(std::string& svg, const Panel& p, double x, double y,
         const std::string& color) {
  svg += "<circle cx=\"" + fmt_d(p.px(x)) + "\" cy=\"" + fmt_d(p.py(y)) +
         "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
}

}  // namespace

std::vector<PairedZero> write_figure(const LFunctionSpec& spec, double t,
                                     const Rect& strip,
                                     const std::string& out_base,
                                     const PrecisionConfig& prec) {
  std::vector<PairedZero> pairs = pair_zeros(spec, t, strip, prec);
  write_figure_data(spec, t, strip, pairs, out_base);
  return pairs;
}

void write_figure_data(const LFunctionSpec& spec, double t, const Rect& strip,
                       const std::vector<PairedZero>& pairs,
                       const std::string& out_base) {
  std::string csv = "panel,re,im,residual,method\n";
  for (const PairedZero& p : pairs) {
    csv += "series," + fmt_d(p.series_zero.center.re) + "," +
           fmt_d(p.series_zero.center.im) + "," +
           fmt_d(p.series_zero.residual) + "," + p.series_zero.method + "\n";
    if (p.matched) {
      CxD w = to_cxd(j_map(spec, t, to_cxr(p.xi_zero_preimage)));
      csv += "xi," + fmt_d(w.re) + "," + fmt_d(w.im) + "," +
             fmt_d(p.distance) + ",newton\n";
    }
  }

  // Mapped strip outline for the right panel.
  std::vector<CxD> outline;
  const int kSide = 60;
  auto push = [&](double x, double y) {
    outline.push_back(to_cxd(j_map(spec, t, CxR{Real(x), Real(y)})));
  };
  for (int k = 0; k <= kSide; ++k)
    push(strip.x_lo + (strip.x_hi - strip.x_lo) * k / kSide, strip.y_lo);
  for (int k = 0; k <= kSide; ++k)
    push(strip.x_hi, strip.y_lo + (strip.y_hi - strip.y_lo) * k / kSide);
  for (int k = 0; k <= kSide; ++k)
    push(strip.x_hi - (strip.x_hi - strip.x_lo) * k / kSide, strip.y_hi);
  for (int k = 0; k <= kSide; ++k)
    push(strip.x_lo, strip.y_hi - (strip.y_hi - strip.y_lo) * k / kSide);

  double wx0 = 1e300, wx1 = -1e300, wy0 = 1e300, wy1 = -1e300;
  for (const CxD& w : outline) {
    wx0 = std::min(wx0, w.re);
    wx1 = std::max(wx1, w.re);
    wy0 = std::min(wy0, w.im);
    wy1 = std::max(wy1, w.im);
  }
  double mx = 0.15 * (wx1 - wx0 + 0.1), my = 0.03 * (wy1 - wy0 + 0.1);
  Panel left{strip.x_lo - 0.05, strip.x_hi + 0.05, strip.y_lo, strip.y_hi,
             70, 380, 40, 560};
  Panel right{std::min(wx0 - mx, 0.45), wx1 + mx, wy0 - my, wy1 + my,
              520, 830, 40, 560};

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" "
      "height=\"600\" viewBox=\"0 0 900 600\">\n";
  svg += std::string("<!-- xideform ") + kToolVersion + " -->\n";
  svg += "<rect width=\"900\" height=\"600\" fill=\"white\"/>\n";
  panel_frame(svg, left, "series zeros");
  panel_frame(svg, right, "image-plane zeros");
  for (const PairedZero& p : pairs)
    dot(svg, left, p.series_zero.center.re, p.series_zero.center.im,
        "#1f77b4");
  svg += "<polyline fill=\"none\" stroke=\"#999\" stroke-width=\"1\" "
         "points=\"";
  for (const CxD& w : outline)
    svg += fmt_d(right.px(w.re)) + "," + fmt_d(right.py(w.im)) + " ";
  svg += "\"/>\n";
  // critical line in the image plane
  svg += "<line x1=\"" + fmt_d(right.px(0.5)) + "\" y1=\"" +
         fmt_d(right.sy0) + "\" x2=\"" + fmt_d(right.px(0.5)) + "\" y2=\"" +
         fmt_d(right.sy1) + "\" stroke=\"#060\" stroke-dasharray=\"4 3\"/>\n";
  for (const PairedZero& p : pairs)
    if (p.matched) {
      CxD w = to_cxd(j_map(spec, t, to_cxr(p.xi_zero_preimage)));
      dot(svg, right, w.re, w.im, "#d62728");
    }
  svg += "</svg>\n";

  atomic_write(out_base + ".csv", csv);
  atomic_write(out_base + ".svg", svg);
}

}  // namespace xideform::cli
