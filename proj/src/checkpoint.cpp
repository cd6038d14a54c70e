#include "scalelab/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "json.hpp"

#include "scalelab/error.hpp"

namespace scalelab {

namespace {

constexpr const char* kMagic = "scalelab-checkpoint 1";

std::uint64_t to_little(std::uint64_t bits) {
  if constexpr (std::endian::native == std::endian::little) return bits;
  std::uint64_t out = 0;
  for (int i = 0; i < 8; ++i) out |= ((bits >> (8 * i)) & 0xffu) << (8 * (7 - i));
  return out;
}

}  // namespace

void write_checkpoint(const std::string& path, const Field& field, const std::string& core,
                      const std::string& config_hash) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  const nlohmann::json header = {{"version", kCheckpointVersion},
                                 {"dim", field.grid().dim()},
                                 {"size", field.grid().size()},
                                 {"components", field.components()},
                                 {"t", field.t()},
                                 {"eta", field.eta()},
                                 {"core", core},
                                 {"config_hash", config_hash}};
  out << kMagic << '\n' << header.dump() << '\n';
  for (double v : field.values()) {
    const std::uint64_t bits = to_little(std::bit_cast<std::uint64_t>(v));
    char bytes[8];
    std::memcpy(bytes, &bits, 8);
    out.write(bytes, 8);
  }
  if (!out) throw IoError("failed writing " + path);
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string magic, header_line;
  std::getline(in, magic);
  if (magic != kMagic) throw IoError(path + ": not a scalelab checkpoint");
  std::getline(in, header_line);
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(header_line);
    if (header.at("version").get<int>() != kCheckpointVersion) {
      throw IoError(path + ": unsupported checkpoint version");
    }
    const Grid grid = make_grid(header.at("dim").get<int>(), header.at("size").get<int>());
    const int comps = header.at("components").get<int>();
    if (comps < 1) throw IoError(path + ": bad component count");
    std::vector<double> values(grid.points() * static_cast<std::size_t>(comps));
    for (double& v : values) {
      char bytes[8];
      if (!in.read(bytes, 8)) throw IoError(path + ": truncated payload");
      std::uint64_t bits;
      std::memcpy(&bits, bytes, 8);
      v = std::bit_cast<double>(to_little(bits));
    }
    if (in.peek() != std::char_traits<char>::eof()) throw IoError(path + ": trailing bytes");
    return {Field(grid, comps, std::move(values), header.at("t").get<double>(),
                  header.at("eta").get<double>()),
            header.at("core").get<std::string>(), header.at("config_hash").get<std::string>()};
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path + ": malformed checkpoint header (" + e.what() + ")");
  } catch (const ValidationError& e) {
    throw IoError(path + ": invalid checkpoint header (" + e.what() + ")");
  }
}

}  // namespace scalelab
