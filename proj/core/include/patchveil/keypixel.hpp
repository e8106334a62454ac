#pragma once

#include <cstdint>
#include <vector>

#include "patchveil/types.hpp"

namespace patchveil {

struct ScoredCell {
  PixelRect rect;
  double score = 0.0;
};

/// Adds the channel-summed absolute values of `gradient` into `heatmap`.
/// Throws on shape mismatch.
void accumulate_heatmap(GradientHeatmap& heatmap, const ImageGradient& gradient);

/// Tiles every detection box into cell_size x cell_size cells (edge cells
/// truncated to the box) and scores each cell by the heatmap mass inside it.
/// Returns the cells of all boxes, in box order then row-major within a box.
std::vector<ScoredCell> score_cells(const GradientHeatmap& heatmap,
                                    const std::vector<Detection>& boxes,
                                    int cell_size);

/// The k highest-scoring cells (fewer if fewer exist). Ties break toward the
/// smaller row-major cell origin, so the result is a pure function of the
/// input.
std::vector<PixelRect> select_top_k(std::vector<ScoredCell> cells, int k);

/// Grid-shaped mask: inside each cell, horizontal and vertical lines of
/// thickness 1 every `spacing` pixels, with both borders always included.
/// Overlapping cells union. spacing must be >= 2.
PixelMask render_grid(const std::vector<PixelRect>& cells, int spacing,
                      int height, int width);

/// Number of grid lines across an extent of `side` pixels at `spacing`:
/// one line every `spacing` pixels starting at the near border, plus the far
/// border when it does not already fall on the progression.
int grid_line_count(int side, int spacing);

/// Uniformly random mask with exactly floor(rate * h * w) set bits,
/// reproducible from the seed.
PixelMask baseline_random_mask(int height, int width, double rate,
                               std::uint64_t seed);

/// Solid patch_size x patch_size square centered on each box, clipped to the
/// image; union over boxes.
PixelMask baseline_center_mask(const std::vector<Detection>& boxes,
                               int patch_size, int height, int width);

}  // namespace patchveil
