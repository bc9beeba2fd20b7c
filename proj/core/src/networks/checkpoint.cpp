#include "nmeasure/networks/checkpoint.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>

#include "nmeasure/core/error.hpp"

namespace nmeasure {

namespace {

constexpr const char* kHeaderPrefix = "arch: ";

std::array<unsigned char, 8> to_le_bytes(double v) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    std::array<unsigned char, 8> out{};
    for (std::size_t i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xFFu);
    return out;
}

double from_le_bytes(const std::array<unsigned char, 8>& in) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(in[i]) << (8 * i);
    return std::bit_cast<double>(bits);
}

}  // namespace

void save_checkpoint(const std::filesystem::path& path, const Mlp& net) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const auto tmp = std::filesystem::path(path).concat(".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open checkpoint for writing: " + tmp.string());
        out << kHeaderPrefix << net.architecture().header() << '\n';
        for (Eigen::Index i = 0; i < net.theta().size(); ++i) {
            const auto bytes = to_le_bytes(net.theta()[i]);
            out.write(reinterpret_cast<const char*>(bytes.data()), 8);
        }
        if (!out) throw IoError("failed writing checkpoint: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move checkpoint into place: " + path.string() + ": " + ec.message());
}

Mlp load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint: " + path.string());
    std::string header;
    if (!std::getline(in, header) || header.rfind(kHeaderPrefix, 0) != 0) {
        throw IoError("checkpoint " + path.string() + " lacks the 'arch:' header line");
    }
    const MLPArchitecture arch = MLPArchitecture::from_header(header.substr(std::strlen(kHeaderPrefix)));
    Eigen::VectorXd theta(static_cast<Eigen::Index>(arch.parameter_count()));
    std::array<unsigned char, 8> buf{};
    for (Eigen::Index i = 0; i < theta.size(); ++i) {
        if (!in.read(reinterpret_cast<char*>(buf.data()), 8)) {
            throw IoError("checkpoint " + path.string() + " is truncated");
        }
        theta[i] = from_le_bytes(buf);
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw IoError("checkpoint " + path.string() + " has trailing bytes");
    }
    return Mlp(arch, std::move(theta));
}

}  // namespace nmeasure
