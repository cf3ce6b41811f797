#include "caf/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "caf/error.hpp"

namespace caf {

namespace fs = std::filesystem;

// --- PGM ---------------------------------------------------------------

void write_pgm(const GrayImage& img, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw IoError("short write to " + path.string());
}

namespace {

// Reads one whitespace-delimited header token, skipping '#' comments.
std::string pgm_token(std::istream& in, const fs::path& path) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    if (tok.empty()) throw FormatError("truncated PGM header in " + path.string());
    return tok;
}

int pgm_int(std::istream& in, const fs::path& path, const char* field) {
    const std::string tok = pgm_token(in, path);
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw FormatError("bad PGM " + std::string(field) + " \"" + tok + "\" in " + path.string());
    }
}

}  // namespace

GrayImage read_pgm(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    const std::string magic = pgm_token(in, path);
    if (magic != "P5") throw FormatError("not a binary PGM (magic \"" + magic + "\") in " + path.string());
    const int width = pgm_int(in, path, "width");
    const int height = pgm_int(in, path, "height");
    const int maxval = pgm_int(in, path, "maxval");
    if (width < 1 || height < 1) throw FormatError("bad PGM dimensions in " + path.string());
    if (maxval != 255) throw FormatError("unsupported PGM maxval " + std::to_string(maxval) + " in " +
                                         path.string() + " (only 255)");
    // exactly one whitespace byte separates the header from the raster
    GrayImage img(width, height);
    in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw FormatError("truncated pixel data in " + path.string());
    return img;
}

// --- dataset directory ---------------------------------------------------

namespace {

std::string padded_index(int64_t i, int width) {
    std::string s = std::to_string(i);
    if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<size_t>(width) - s.size(), '0');
    return s;
}

}  // namespace

void save_dataset(const std::vector<LabeledSample>& samples, const fs::path& dir) {
    fs::create_directories(dir / "img");
    const int width = samples.empty() ? 1 : static_cast<int>(std::to_string(samples.size() - 1).size());
    std::ofstream manifest(dir / "manifest.tsv", std::ios::binary);
    if (!manifest) throw IoError("cannot open " + (dir / "manifest.tsv").string() + " for writing");
    for (size_t i = 0; i < samples.size(); ++i) {
        const std::string idx = padded_index(static_cast<int64_t>(i), width);
        manifest << idx << "\t" << samples[i].label << "\n";
        write_pgm(samples[i].image, dir / "img" / (idx + ".pgm"));
    }
    if (!manifest) throw IoError("short write to " + (dir / "manifest.tsv").string());
}

std::vector<LabeledSample> load_dataset(const fs::path& dir, const Alphabet* alpha) {
    const fs::path manifest_path = dir / "manifest.tsv";
    std::ifstream manifest(manifest_path, std::ios::binary);
    if (!manifest) throw IoError("cannot open " + manifest_path.string());

    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    while (std::getline(manifest, line)) {
        if (line.empty()) continue;
        const size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw FormatError("manifest line " + std::to_string(entries.size() + 1) + " in " +
                              manifest_path.string() + " has no tab separator");
        entries.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }

    size_t pgm_files = 0;
    const fs::path img_dir = dir / "img";
    if (fs::exists(img_dir))
        for (const auto& e : fs::directory_iterator(img_dir))
            if (e.path().extension() == ".pgm") ++pgm_files;
    if (pgm_files != entries.size())
        throw FormatError("manifest lists " + std::to_string(entries.size()) + " samples but " +
                          img_dir.string() + " holds " + std::to_string(pgm_files) + " images");

    std::vector<LabeledSample> samples;
    samples.reserve(entries.size());
    for (const auto& [idx, label] : entries) {
        const fs::path img_path = img_dir / (idx + ".pgm");
        if (alpha) {
            for (char c : label)
                if (!alpha->contains(c))
                    throw FormatError("label \"" + label + "\" for " + img_path.string() +
                                      " has character '" + std::string(1, c) + "' outside the alphabet");
        }
        LabeledSample s;
        s.label = label;
        s.image = read_pgm(img_path);
        if (!samples.empty()) {
            if (s.image.width != samples[0].image.width || s.image.height != samples[0].image.height)
                throw FormatError("image size mismatch at " + img_path.string());
            if (s.label.size() != samples[0].label.size())
                throw FormatError("label length mismatch at " + img_path.string());
        }
        samples.push_back(std::move(s));
    }
    return samples;
}

// --- checkpoint -----------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'C', 'A', 'F', 'C', 'K', 'P', 'T', '\n'};

void put_u32(std::string& buf, uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::string& buf, uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_f64(std::string& buf, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(buf, bits);
}

struct Reader {
    const std::string& buf;
    size_t pos = 0;
    const fs::path& path;

    void need(size_t n) {
        if (pos + n > buf.size()) throw CorruptionError("truncated checkpoint " + path.string());
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
        pos += 8;
        return v;
    }
    double f64() {
        uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }
    std::string str() {
        uint32_t len = u32();
        need(len);
        std::string s = buf.substr(pos, len);
        pos += len;
        return s;
    }
};

uint64_t fnv1a(const char* data, size_t n) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (size_t i = 0; i < n; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 0x100000001B3ULL;
    }
    return h;
}

void put_tensor_data(std::string& buf, const Tensor& t) {
    for (int64_t i = 0; i < t.size(); ++i) put_f64(buf, t[i]);
}

}  // namespace

void save_checkpoint(const TrainState& state, const NetConfig& net, const OptimConfig& optim,
                     const std::string& alphabet, const fs::path& path) {
    std::string payload;
    put_u32(payload, static_cast<uint32_t>(net.input_h));
    put_u32(payload, static_cast<uint32_t>(net.input_w));
    put_u32(payload, static_cast<uint32_t>(net.convs.size()));
    for (size_t s = 0; s < net.convs.size(); ++s) {
        const ConvSpec& c = net.convs[s];
        const PoolSpec& p = net.pools[s];
        put_u32(payload, static_cast<uint32_t>(c.filters));
        put_u32(payload, static_cast<uint32_t>(c.kernel));
        put_u32(payload, static_cast<uint32_t>(c.pad));
        put_u32(payload, static_cast<uint32_t>(c.stride));
        put_u32(payload, static_cast<uint32_t>(p.window));
        put_u32(payload, static_cast<uint32_t>(p.stride));
    }
    put_u32(payload, static_cast<uint32_t>(net.fc1_width));
    put_u32(payload, static_cast<uint32_t>(net.head.length));
    put_u32(payload, static_cast<uint32_t>(net.head.classes));
    put_f64(payload, net.dropout_rate);

    put_f64(payload, optim.alpha0);
    put_f64(payload, optim.beta);
    put_f64(payload, optim.gamma);
    put_f64(payload, optim.momentum);
    put_f64(payload, optim.weight_decay);
    put_u32(payload, static_cast<uint32_t>(optim.batch_size));

    put_u32(payload, static_cast<uint32_t>(alphabet.size()));
    payload += alphabet;

    put_u64(payload, static_cast<uint64_t>(state.t));

    put_u32(payload, static_cast<uint32_t>(state.params.entries.size()));
    for (const auto& e : state.params.entries) {
        put_u32(payload, static_cast<uint32_t>(e.name.size()));
        payload += e.name;
        payload.push_back(e.decay ? 1 : 0);
        put_u32(payload, static_cast<uint32_t>(e.value.shape().size()));
        for (int64_t ext : e.value.shape()) put_u64(payload, static_cast<uint64_t>(ext));
        put_tensor_data(payload, e.value);
    }
    if (state.velocity.size() != state.params.entries.size())
        throw ValueError("velocity buffers do not mirror parameters");
    for (const auto& v : state.velocity) put_tensor_data(payload, v);

    std::string file;
    file.append(kMagic, sizeof(kMagic));
    put_u32(file, kCheckpointVersion);
    put_u32(file, 0);  // reserved
    put_u64(file, payload.size());
    file += payload;
    put_u64(file, fnv1a(payload.data(), payload.size()));

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(file.data(), static_cast<std::streamsize>(file.size()));
    if (!out) throw IoError("short write to " + path.string());
}

CheckpointData load_checkpoint(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (file.size() < sizeof(kMagic) + 8 + 8 + 8 ||
        std::memcmp(file.data(), kMagic, sizeof(kMagic)) != 0)
        throw FormatError(path.string() + " is not a checkpoint file");

    Reader hdr{file, sizeof(kMagic), path};
    const uint32_t version = hdr.u32();
    if (version != kCheckpointVersion)
        throw VersionError("checkpoint version " + std::to_string(version) + " in " + path.string() +
                           ", expected " + std::to_string(kCheckpointVersion));
    hdr.u32();  // reserved
    const uint64_t payload_size = hdr.u64();
    const size_t payload_off = hdr.pos;
    if (file.size() != payload_off + payload_size + 8)
        throw CorruptionError("truncated checkpoint " + path.string());
    const uint64_t stored_digest =
        Reader{file, payload_off + static_cast<size_t>(payload_size), path}.u64();
    if (fnv1a(file.data() + payload_off, static_cast<size_t>(payload_size)) != stored_digest)
        throw CorruptionError("digest mismatch in " + path.string());

    Reader r{file, payload_off, path};
    CheckpointData data;
    data.net.input_h = static_cast<int>(r.u32());
    data.net.input_w = static_cast<int>(r.u32());
    const uint32_t stages = r.u32();
    for (uint32_t s = 0; s < stages; ++s) {
        ConvSpec c;
        PoolSpec p;
        c.filters = static_cast<int>(r.u32());
        c.kernel = static_cast<int>(r.u32());
        c.pad = static_cast<int>(r.u32());
        c.stride = static_cast<int>(r.u32());
        p.window = static_cast<int>(r.u32());
        p.stride = static_cast<int>(r.u32());
        data.net.convs.push_back(c);
        data.net.pools.push_back(p);
    }
    data.net.fc1_width = static_cast<int>(r.u32());
    data.net.head.length = static_cast<int>(r.u32());
    data.net.head.classes = static_cast<int>(r.u32());
    data.net.dropout_rate = r.f64();

    data.optim.alpha0 = r.f64();
    data.optim.beta = r.f64();
    data.optim.gamma = r.f64();
    data.optim.momentum = r.f64();
    data.optim.weight_decay = r.f64();
    data.optim.batch_size = static_cast<int>(r.u32());

    data.alphabet = r.str();
    data.state.t = static_cast<int64_t>(r.u64());

    const uint32_t n_entries = r.u32();
    for (uint32_t i = 0; i < n_entries; ++i) {
        ModelParams::Entry e;
        e.name = r.str();
        r.need(1);
        e.decay = file[r.pos++] != 0;
        const uint32_t rank = r.u32();
        std::vector<int64_t> shape;
        for (uint32_t d = 0; d < rank; ++d) shape.push_back(static_cast<int64_t>(r.u64()));
        const int64_t count = checked_element_count(shape);
        std::vector<double> values(static_cast<size_t>(count));
        for (auto& v : values) v = r.f64();
        e.value = Tensor::from_values(std::move(shape), std::move(values));
        data.state.params.entries.push_back(std::move(e));
    }
    for (uint32_t i = 0; i < n_entries; ++i) {
        const Tensor& p = data.state.params.entries[i].value;
        std::vector<double> values(static_cast<size_t>(p.size()));
        for (auto& v : values) v = r.f64();
        data.state.velocity.push_back(Tensor::from_values(p.shape(), std::move(values)));
    }
    if (r.pos != payload_off + payload_size)
        throw CorruptionError("trailing bytes in checkpoint " + path.string());
    return data;
}

// --- metrics CSV -----------------------------------------------------------

namespace {

std::string fmt_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void write_metrics(std::vector<MetricsRow> rows, const fs::path& path) {
    std::stable_sort(rows.begin(), rows.end(), [](const MetricsRow& a, const MetricsRow& b) {
        if (a.run != b.run) return a.run < b.run;
        if (a.round != b.round) return a.round < b.round;
        return a.iter < b.iter;
    });
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "run,round,iter,lr,loss,seq_acc,char_acc,train_size,mean_eta\n";
    for (const auto& r : rows) {
        out << r.run << "," << r.round << "," << r.iter << "," << fmt_g6(r.lr) << "," << fmt_g6(r.loss)
            << "," << fmt_g6(r.seq_acc) << "," << fmt_g6(r.char_acc) << "," << r.train_size << ","
            << fmt_g6(r.mean_eta) << "\n";
    }
    if (!out) throw IoError("short write to " + path.string());
}

}  // namespace caf
