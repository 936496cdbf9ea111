#include "maskit/limitset.hpp"

#include <cmath>
#include <fstream>

#include "maskit/domain.hpp"
#include "maskit/errors.hpp"

namespace maskit {

namespace {

bool cancels(int a, int b) { return (a ^ 1) == b; }

}  // namespace

ReducedWordIterator::ReducedWordIterator(int max_len) : max_len_(max_len) {
    if (max_len < 1) throw PreconditionError("max_len must be at least 1");
}

// Odometer over letter indices; skips words with an adjacent inverse pair.
bool ReducedWordIterator::advance() {
    for (;;) {
        int k = len_ - 1;
        while (k >= 0 && digits_[k] == 5) digits_[k--] = 0;
        if (k < 0) return false;
        ++digits_[k];
        bool ok = true;
        for (int i = 0; i + 1 < len_ && ok; ++i) ok = !cancels(digits_[i], digits_[i + 1]);
        if (ok) return true;
    }
}

bool ReducedWordIterator::next(GroupWord& out) {
    if (!started_) {
        started_ = true;
        len_ = 1;
        digits_.assign(1, 0);
    } else if (!advance()) {
        if (++len_ > max_len_) {
            len_ = max_len_;
            return false;
        }
        // a^len is the first reduced word of the new length.
        digits_.assign(len_, 0);
    }
    std::vector<Letter> ls;
    ls.reserve(digits_.size());
    for (int d : digits_) ls.push_back(Letter::from_index(d));
    out = GroupWord(std::move(ls));
    return true;
}

std::vector<GroupWord> enumerate_reduced_words(int max_len) {
    std::vector<GroupWord> out;
    ReducedWordIterator it(max_len);
    GroupWord w;
    while (it.next(w)) out.push_back(w);
    return out;
}

std::uint64_t reduced_word_count(int max_len) {
    std::uint64_t total = 0, level = 6;
    for (int k = 1; k <= max_len; ++k, level *= 5) total += level;
    return total;
}

LimitPointSet limit_points(const ParameterPoint& p, int max_len, cplx z0) {
    if (max_len < 0) throw PreconditionError("max_len must be non-negative");
    LimitPointSet out;
    out.decorative = membership(p).status != Membership::PROVED_INSIDE;
    out.points.reserve(static_cast<std::size_t>(reduced_word_count(max_len)) + 1);
    out.points.push_back({z0, 0});

    Mat2C gens[6];
    for (int i = 0; i < 6; ++i) gens[i] = generator_matrix(Letter::from_index(i), p);

    struct Node {
        Mat2C m;
        int last;
    };
    std::vector<Node> level{{Mat2C{}, -1}}, next;
    for (int len = 1; len <= max_len; ++len) {
        next.clear();
        next.reserve(level.size() * 5 + 1);
        for (const auto& n : level) {
            for (int l = 0; l < 6; ++l) {
                if (n.last >= 0 && cancels(n.last, l)) continue;
                const Mat2C m = n.m * gens[l];
                next.push_back({m, l});
                const cplx den = m.c * z0 + m.d;
                if (std::abs(den) < 1e-300) continue;
                const cplx z = (m.a * z0 + m.b) / den;
                if (std::isfinite(z.real()) && std::isfinite(z.imag())) out.points.push_back({z, len});
            }
        }
        level.swap(next);
    }
    return out;
}

bool in_strips(cplx z, const ParameterPoint& p, double tol) {
    const double y = z.imag(), top = p.tau1.imag();
    return (y >= -tol && y <= 0.5 + tol) || (y >= top - 0.5 - tol && y <= top + tol);
}

void validate(const Viewport& vp) {
    if (!(vp.max.real() > vp.min.real()) || !(vp.max.imag() > vp.min.imag()))
        throw PreconditionError("viewport max - min must have positive real and imaginary parts");
    if (vp.width_px <= 0 || vp.height_px <= 0)
        throw PreconditionError("viewport pixel size must be positive");
}

bool to_pixel(const Viewport& vp, cplx z, int& px, int& py) {
    const double fx = (z.real() - vp.min.real()) / (vp.max.real() - vp.min.real()) * vp.width_px;
    const double fy = (vp.max.imag() - z.imag()) / (vp.max.imag() - vp.min.imag()) * vp.height_px;
    if (!(fx >= 0.0 && fx < vp.width_px && fy >= 0.0 && fy < vp.height_px)) return false;
    px = static_cast<int>(std::floor(fx));
    py = static_cast<int>(std::floor(fy));
    return true;
}

std::vector<std::uint8_t> rasterize(const std::vector<OrbitPoint>& pts, const Viewport& vp) {
    validate(vp);
    std::vector<std::uint8_t> img(static_cast<std::size_t>(vp.width_px) * vp.height_px, 0);
    int px = 0, py = 0;
    for (const auto& o : pts)
        if (to_pixel(vp, o.z, px, py)) img[static_cast<std::size_t>(py) * vp.width_px + px] = 255;
    return img;
}

void render_pgm(const std::vector<OrbitPoint>& pts, const Viewport& vp, const std::string& path) {
    const auto img = rasterize(pts, vp);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << "P5\n" << vp.width_px << ' ' << vp.height_px << "\n255\n";
    f.write(reinterpret_cast<const char*>(img.data()), static_cast<std::streamsize>(img.size()));
    if (!f) throw IoError("write to " + path + " failed");
}

void render_svg(const std::vector<OrbitPoint>& pts, const Viewport& vp, const std::string& path) {
    validate(vp);
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << vp.width_px << "\" height=\""
      << vp.height_px << "\" viewBox=\"0 0 " << vp.width_px << ' ' << vp.height_px << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"black\"/>\n<g fill=\"white\">\n";
    // One mark per lit pixel keeps the file size bounded by the viewport.
    const auto img = rasterize(pts, vp);
    for (int y = 0; y < vp.height_px; ++y)
        for (int x = 0; x < vp.width_px; ++x)
            if (img[static_cast<std::size_t>(y) * vp.width_px + x])
                f << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"1\" height=\"1\"/>\n";
    f << "</g>\n</svg>\n";
    if (!f) throw IoError("write to " + path + " failed");
}

}  // namespace maskit
