#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maskit/matrix.hpp"
#include "maskit/word.hpp"

namespace maskit {

// BFS over freely reduced words of length 1..max_len.
class ReducedWordIterator {
public:
    explicit ReducedWordIterator(int max_len);
    bool next(GroupWord& out);

private:
    int max_len_;
    int len_ = 0;
    std::vector<int> digits_;
    bool started_ = false;
    bool advance();
};

std::vector<GroupWord> enumerate_reduced_words(int max_len);
std::uint64_t reduced_word_count(int max_len);

struct OrbitPoint {
    cplx z;
    int word_length = 0;
};

struct LimitPointSet {
    std::vector<OrbitPoint> points;  // finite points only
    bool decorative = false;         // parameter point not proved inside
};

// g(z0) for the identity and all reduced words g with |g| <= max_len.
LimitPointSet limit_points(const ParameterPoint& p, int max_len, cplx z0 = 0.0);

// 0 <= Im z <= 1/2 or Im tau1 - 1/2 <= Im z <= Im tau1, widened by tol.
bool in_strips(cplx z, const ParameterPoint& p, double tol);

struct Viewport {
    cplx min;
    cplx max;
    int width_px = 0;
    int height_px = 0;
};

void validate(const Viewport& vp);
// Pixel of z, or false if clipped. Row 0 is the top (largest Im).
bool to_pixel(const Viewport& vp, cplx z, int& px, int& py);

std::vector<std::uint8_t> rasterize(const std::vector<OrbitPoint>& pts, const Viewport& vp);
void render_pgm(const std::vector<OrbitPoint>& pts, const Viewport& vp, const std::string& path);
void render_svg(const std::vector<OrbitPoint>& pts, const Viewport& vp, const std::string& path);

}  // namespace maskit
