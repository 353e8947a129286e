#include "nlwave/snapshot.hpp"

#include <bit>
#include <fstream>

#include "json.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot blobs are little-endian");

namespace nlwave {

namespace {

// Snapshot blobs are ordered k-lexicographically (k1 slowest, each axis from
// -K to K), independent of the in-memory FFT-natural layout.
template <typename F>
void for_each_mode_lex(const GridSpec& g, F&& f) {
  const int K = g.degree;
  std::array<int, 3> k{0, 0, 0};
  const int lo2 = g.dim >= 2 ? -K : 0, hi2 = g.dim >= 2 ? K : 0;
  const int lo3 = g.dim >= 3 ? -K : 0, hi3 = g.dim >= 3 ? K : 0;
  for (k[0] = -K; k[0] <= K; ++k[0])
    for (k[1] = lo2; k[1] <= hi2; ++k[1])
      for (k[2] = lo3; k[2] <= hi3; ++k[2]) f(k);
}

}  // namespace

void write_snapshot(const TorusField& f, const std::filesystem::path& bin_path,
                    const std::filesystem::path& json_path,
                    const std::string& component) {
  std::ofstream bin(bin_path, std::ios::binary);
  if (!bin) throw IoError("cannot open snapshot blob: " + bin_path.string());
  for_each_mode_lex(f.grid(), [&](const std::array<int, 3>& k) {
    const Complex c = f.at(k);
    const double re = c.real(), im = c.imag();
    bin.write(reinterpret_cast<const char*>(&re), sizeof(double));
    bin.write(reinterpret_cast<const char*>(&im), sizeof(double));
  });
  if (!bin) throw IoError("failed writing snapshot blob: " + bin_path.string());

  nlohmann::ordered_json header{{"d", f.grid().dim},
                                {"K", f.grid().degree},
                                {"real_flag", f.real_valued()},
                                {"component", component}};
  std::ofstream js(json_path);
  if (!js) throw IoError("cannot open snapshot header: " + json_path.string());
  js << header.dump(2) << '\n';
  if (!js) throw IoError("failed writing snapshot header: " + json_path.string());
}

TorusField read_snapshot(const std::filesystem::path& bin_path,
                         const std::filesystem::path& json_path,
                         std::string* component) {
  std::ifstream js(json_path);
  if (!js) throw IoError("cannot open snapshot header: " + json_path.string());
  const nlohmann::json header = nlohmann::json::parse(js);
  const GridSpec g(header.at("d").get<int>(), header.at("K").get<int>());
  if (component) *component = header.value("component", "");

  std::ifstream bin(bin_path, std::ios::binary);
  if (!bin) throw IoError("cannot open snapshot blob: " + bin_path.string());
  TorusField f(g, header.at("real_flag").get<bool>());
  for_each_mode_lex(g, [&](const std::array<int, 3>& k) {
    double re = 0.0, im = 0.0;
    bin.read(reinterpret_cast<char*>(&re), sizeof(double));
    bin.read(reinterpret_cast<char*>(&im), sizeof(double));
    f.at(k) = Complex(re, im);
  });
  if (!bin) throw IoError("snapshot blob truncated: " + bin_path.string());
  return f;
}

}  // namespace nlwave
