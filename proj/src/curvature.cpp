#include "curlclean/curvature/geometry.hpp"

namespace curlclean {

void riemann(const CurvatureBundle& B, double out[3][3][3][3]) {
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) {
          double r = B.dchrist[k][m](i, j) - B.dchrist[j][m](i, k);
          for (int l = 0; l < 3; ++l)
            r += B.christ[l](i, j) * B.christ[m](l, k) -
                 B.christ[l](i, k) * B.christ[m](l, j);
          out[m][i][k][j] = r;
        }
}

}  // namespace curlclean
