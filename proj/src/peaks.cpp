#include "atsplit/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace atsplit {

namespace {

constexpr double kRelativePeakFloor = 0.01;

// Vertex of the parabola through (x[i-1..i+1], y[i-1..i+1]), in coordinates centred on x[i].
Peak refine(std::span<const double> y, std::span<const double> x, std::size_t i)
{
    const double u0 = x[i - 1] - x[i];
    const double u2 = x[i + 1] - x[i];
    const double d0 = y[i - 1] - y[i];
    const double d2 = y[i + 1] - y[i];
    const double det = u0 * u2 * (u0 - u2);
    const double a = (d0 * u2 - d2 * u0) / det;
    const double b = (u0 * u0 * d2 - u2 * u2 * d0) / det;
    if (!(a < 0.0))
        return {x[i], y[i], i};
    const double offset = std::clamp(-b / (2.0 * a), u0, u2);
    return {x[i] + offset, y[i] - b * b / (4.0 * a), i};
}

}  // namespace

std::vector<Peak> find_peaks(std::span<const double> row, std::span<const double> grid)
{
    std::vector<Peak> peaks;
    const std::size_t n = std::min(row.size(), grid.size());
    if (n < 3)
        return peaks;

    const double global_max = *std::max_element(row.begin(), row.begin() + n);
    if (!(global_max > 0.0))
        return peaks;
    const double floor = kRelativePeakFloor * global_max;

    std::size_t i = 1;
    while (i + 1 < n) {
        if (!(row[i] > row[i - 1])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && row[j + 1] == row[i])
            ++j;
        const bool falls_after = j + 1 < n && row[j + 1] < row[i];
        if (falls_after && row[i] >= floor)
            peaks.push_back(j == i ? refine(row, grid, i) : Peak{grid[i], row[i], i});
        i = j + 1;
    }
    return peaks;
}

std::optional<Peak> tallest_peak(std::span<const Peak> peaks)
{
    if (peaks.empty())
        return std::nullopt;
    return *std::max_element(peaks.begin(), peaks.end(),
                             [](const Peak& a, const Peak& b) { return a.height < b.height; });
}

std::optional<double> measure_splitting(std::span<const Peak> peaks)
{
    if (peaks.size() < 2)
        return std::nullopt;
    std::vector<Peak> sorted(peaks.begin(), peaks.end());
    std::partial_sort(sorted.begin(), sorted.begin() + 2, sorted.end(),
                      [](const Peak& a, const Peak& b) { return a.height > b.height; });
    return std::abs(sorted[0].position - sorted[1].position);
}

std::optional<double> measure_fwhm(std::span<const double> row, std::span<const double> grid,
                                   const Peak& peak)
{
    const std::size_t n = std::min(row.size(), grid.size());
    if (peak.index >= n)
        return std::nullopt;
    const double half = 0.5 * peak.height;

    auto crossing = [&](std::size_t inside, std::size_t outside) {
        const double t = (row[inside] - half) / (row[inside] - row[outside]);
        return grid[inside] + t * (grid[outside] - grid[inside]);
    };

    std::size_t l = peak.index;
    while (l > 0 && row[l - 1] > half)
        --l;
    if (l == 0)
        return std::nullopt;
    std::size_t r = peak.index;
    while (r + 1 < n && row[r + 1] > half)
        ++r;
    if (r + 1 == n)
        return std::nullopt;

    return crossing(r, r + 1) - crossing(l, l - 1);
}

}  // namespace atsplit
