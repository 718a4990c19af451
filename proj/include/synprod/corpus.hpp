#pragma once

// Bundled copy of the 118 benchmark instances.

namespace synprod::hdp {

inline constexpr const char* kBundledInstances = R"PL(
instance(a1,   6, [ 420, 300, 300],      [1,1],     [[2,1,3,1],     [2,1],         [3,1]],                        1000).
instance(a2,   6, [ 300, 300, 300],      [6,4],     [[2,1,3,1],     [2,1,3,1],     [2,3,1]],                      1000).
instance(a3,   6, [ 300, 300, 300],      [6,4],     [[2,1,3,1],     [2,1,3,1],     [3,2,1]],                      1000).
instance(a12,  6, [ 300, 300, 300],      [6,4],     [[2,1,3,1],     [2,1,3,1],     [[2,3],1]],                    1000).
instance(a4,   6, [ 900, 900, 900, 900], [8,15,34], [[2,1,3,1,4,1], [4,1,2,3,1],   [2,4,1],       [3,4,1]],       1000).
instance(a5,   6, [ 900, 900, 900, 900], [8,15,34], [[2,1,3,1,4,1], [4,1,2,3,1],   [2,4,1],       [4,3,1]],       1000).
instance(a6,   6, [ 900, 900, 900, 900], [8,15,34], [[2,1,3,1,4,1], [4,1,2,3,1],   [4,2,1],       [3,4,1]],       1000).
instance(a7,   6, [ 900, 900, 900, 900], [8,15,34], [[2,1,3,1,4,1], [4,1,2,3,1],   [4,2,1],       [4,3,1]],       1000).
instance(a8,   6, [ 900, 900, 900, 900], [8,15,34], [[2,1,3,1,4,1], [4,1,3,2,1],   [2,4,1],       [3,4,1]],       1000).
instance(a9,   6, [ 900, 900, 900, 900], [8,15,34], [[2,1,3,1,4,1], [4,1,3,2,1],   [2,4,1],       [4,3,1]],       1000).
instance(a10,  6, [ 900, 900, 900, 900], [8,15,34], [[2,1,3,1,4,1], [4,1,3,2,1],   [4,2,1],       [3,4,1]],       1000).
instance(a11,  6, [ 900, 900, 900, 900], [8,15,34], [[2,1,3,1,4,1], [4,1,3,2,1],   [4,2,1],       [4,3,1]],       1000).
instance(a13,  6, [ 900, 900, 900, 900], [8,15,34], [[2,1,3,1,4,1], [4,1,[3,2],1], [[4,2],1],     [[4,3],1]],     1000).
instance(ia6,  5, [ 250,1000,1000],      [2,2],     [[[2,3],1],     [2,1],         [3,1]],                         562).
instance(ia7,  5, [ 250, 500,1000],      [3,5],     [[2,1,3,1],     [2,1],         [3,1]],                         300).
instance(ia8,  5, [ 250, 500,1000],      [8,3],     [[2,1,3,1],     [3,1],         [2,1]],                         187).
instance(ib12, 5, [ 250, 500, 500,1000], [1,2,1],   [[2,1,3,1,4,1], [2,1],         [[3,4],1],     [[3,4],1]],      994).
instance(ia13, 5, [ 250, 250,1000],      [5,4],     [[2,1,3,1],     [2,1],         [3,1]],                         250).
instance(ib13, 5, [ 250, 500,1000,1000], [4,4,3],   [[2,1,3,1,4,1], [2,1],         [[3,4],1],     [3,1,[2,4],1]],  505).
instance(ia14, 5, [ 250, 250,1000],      [5,5],     [[2,1,3,1],     [2,1],         [3,1]],                         250).
instance(ib14, 5, [ 250,1000,1000,1000], [3,2,7],   [[2,1,3,1,4,1], [2,1],         [[3,4],1],     [[3,4],1]],      416).
instance(ia21, 5, [ 250, 250,1000],      [2,2],     [[2,1,3,1],     [2,1],         [3,1]],                         625).
instance(ia22, 5, [ 250, 500,1000],      [4,3],     [[2,1,3,1],     [3,1],         [2,1]],                         375).
instance(ic22, 5, [ 500,1000,1000],      [4,6],     [[2,1,3,1],     [2,1],         [3,1]],                         332).
instance(id22, 5, [ 250, 250, 500,1000], [3,1,2],   [[2,1,[3,4],1], [3,1],         [4,1],         [2,1]],          499).
instance(ib23, 5, [ 250,1000,1000,1000], [6,4,2],   [[2,1,3,1,4,1], [3,1],         [[2,4],1],     [2,1,[3,4],1]],  497).
instance(ic23, 5, [ 250, 250, 250,1000], [3,2,2],   [[2,1,3,1,4,1], [3,1],         [[2,4],1],     [[2,4],1]],      493).
instance(ja13, 5, [1000, 250, 250],      [5,4],     [[2,1,3,1],     [2,1],         [3,1]],                         250).
instance(jb13, 5, [1000, 250, 500,1000], [4,4,3],   [[2,1,3,1,4,1], [2,1],         [[3,4],1],     [3,1,[2,4],1]],  505).
instance(jb23, 5, [1000, 250,1000,1000], [6,4,2],   [[2,1,3,1,4,1], [3,1],         [[2,4],1],     [2,1,[3,4],1]],  497).
instance(jc23, 5, [1000, 250, 250, 250], [3,2,2],   [[2,1,3,1,4,1], [3,1],         [[2,4],1],     [[2,4],1]],      493).
instance(kb13, 5, [1000, 250, 500,1000], [4,3,4],   [[2,1,3,1,4,1], [[2,4],1],     [2,1,[3,4],1], [2,1,3,1,4,1]],  630).
instance(kb14b,5, [1000,1000,1000, 500], [8,4,2],   [[2,1,[3,4],1], [3,1,[2,4],1], [4,1,[2,3],1], [2,1]],          432).
instance(kb23b,5, [1000, 500,1000],      [6,8],     [[2,1,3,1],     [2,1],         [3,1]],                         249).
instance(ka23c,5, [1000, 500,1000],      [8,6],     [[2,1,3,1],     [3,1],         [2,1]],                         249).
instance(kb23c,5, [1000, 250,1000],      [3,7],     [[2,1,3,1],     [2,1],         [3,1]],                         284).
instance(kd23c,5, [ 500, 500, 500, 500], [3,3,1],   [[2,1,3,1,4,1], [2,1],         [[3,4],1],     [3,1,[2,4],1]],  497).
instance(kb21d,5, [1000, 500, 500,1000], [2,2,1],   [[2,1,3,1,4,1], [2,1],         [[3,4],1],     [3,1,[2,4],1]], 1166).
instance(kd22d,5, [ 500, 250, 250, 500], [2,1,2],   [[2,1,3,1,4,1], [2,1],         [[3,4],1],     [4,1,[2,3],1]],  583).
instance(la6,  5, [1000, 250,1000],      [2,2],     [[[2,3],1],     [2,1],         [3,1]],                         562).
instance(la7,  5, [1000, 250, 500],      [3,5],     [[2,1,3,1],     [2,1],         [3,1]],                         300).
instance(la8,  5, [1000, 250, 500],      [8,3],     [[2,1,3,1],     [3,1],         [2,1]],                         187).
instance(la12, 5, [ 500,1000,1000],      [3,3],     [[2,1,3,1],     [2,1,3,1],     [2,1,3,1]],                     832).
instance(lb12, 5, [1000, 250, 500, 500], [1,2,1],   [[2,1,3,1,4,1], [2,1],         [[3,4],1],     [[3,4],1]],      994).
instance(la13, 5, [1000, 250, 250],      [4,5],     [[2,1,3,1],     [2,1],         [3,1]],                         250).
instance(lb13, 5, [1000, 250, 500,1000], [4,3,4],   [[2,1,3,1,4,1], [[2,4],1],     [2,1,3,1],     [2,1,3,1,4,1]],  591).
instance(la14, 5, [1000, 250, 250],      [5,5],     [[2,1,3,1],     [2,1],         [3,1]],                         250).
instance(lb14, 5, [1000, 250,1000,1000], [3,2,7],   [[2,1,3,1,4,1], [2,1],         [[3,4],1],     [[3,4],1]],      416).
instance(la21, 5, [ 500, 500, 500],      [1,2],     [[[2,3],1],     [2,1],         [3,1]],                         497).
instance(lb21, 5, [1000, 250, 250],      [2,2],     [[2,1,3,1],     [2,1],         [3,1]],                         625).
instance(ld21, 5, [ 500, 500, 500, 500], [1,1,1],   [[2,1,3,1,4,1], [2,1],         [3,1],         [4,1]],         1000).
instance(la22, 5, [1000, 250, 500],      [4,3],     [[2,1,3,1],     [3,1],         [2,1]],                         375).
instance(lb22, 5, [1000,1000,1000],      [6,6],     [[2,1,3,1],     [2,1],         [3,1]],                         332).
instance(lc22, 5, [1000, 500,1000],      [4,6],     [[2,1,3,1],     [2,1],         [3,1]],                         332).
instance(ld22, 5, [1000, 250, 250, 500], [3,1,2],   [[2,1,[3,4],1], [3,1],         [4,1],         [2,1]],          499).
instance(la23, 5, [1000,1000,1000],      [7,8],     [[2,1,3,1],     [2,1],         [3,1]],                         250).
instance(lb23, 5, [1000, 250, 250,1000], [6,2,2],   [[2,1,[3,4],1], [3,1],         [4,1],         [2,1]],          332).
instance(lc23, 5, [1000, 250, 250, 500], [4,3,2],   [[2,1,3,1,4,1], [3,1],         [4,1],         [2,1]],          375).
instance(la24, 5, [1000, 250, 500, 500], [1,1,1],   [[2,1,3,1,4,1], [4,1],         [2,1],         [3,1]],         1250).
instance(la25, 5, [1000, 250,1000,1000], [1,2,2],   [[2,1,3,1,4,1], [2,1],         [3,1],         [4,1]],         1000).
instance(la26, 5, [1000,1000,1000],      [4,4],     [[2,1,3,1],     [2,1],         [3,1]],                         500).
instance(lb26, 5, [1000, 250,1000],      [5,1],     [[[2,3],1],     [3,1],         [2,1]],                         375).
instance(la30, 5, [1000, 500, 500],      [2,2],     [[2,1,3,1],     [2,1],         [3,1]],                         750).
instance(lb30, 5, [1000,1000,1000],      [3,3],     [[2,1,3,1],     [2,1],         [3,1]],                         666).
instance(le30, 5, [1000, 250, 250, 250], [1,1,1],   [[2,1,3,1,4,1], [2,1],         [3,1],         [4,1]],         1250).
instance(ma6b, 5, [ 500, 250, 500],      [1,1],     [[2,1,3,1],     [3,1],         [2,1]],                         750).
instance(ma7b, 5, [1000, 500, 500],      [2,5],     [[[2,3],1],     [2,1],         [3,1]],                         285).
instance(ma8b, 5, [1000, 500, 500,1000], [1,5,6],   [[3,1,[2,4],1], [2,1],         [3,1],         [4,1]],          300).
instance(ma12b,5, [1000, 500, 500],      [3,3],     [[2,1,3,1],     [2,1],         [3,1]],                         499).
instance(mb12b,5, [ 250, 250, 250],      [1,1],     [[2,1,3,1],     [2,1],         [3,1]],                         500).
instance(mc12b,5, [1000, 500,1000],      [4,3],     [[2,1,3,1],     [3,1],         [2,1]],                         499).
instance(ma13b,5, [ 500, 500, 500],      [3,6],     [[[2,3],1],     [2,1],         [3,1]],                         163).
instance(mb13b,5, [1000, 500, 250, 250], [5,3,5],   [[2,1,3,1,4,1], [4,1],         [[2,3],1],     [[2,3],1]],      294).
instance(ma14b,5, [1000, 500,1000],      [3,10],    [[[2,3],1],     [2,1],         [3,1]],                         192).
instance(mb14b,5, [1000, 500,1000,1000], [8,4,2],   [[2,1,3,1,4,1], [[2,4],1],     [2,1,[3,4],1], [[2,3],1]],      433).
instance(mb21b,5, [1000, 500,1000],      [2,3],     [[2,1,3,1],     [2,1],         [3,1]],                         666).
instance(ma22b,5, [1000, 500, 500],      [5,5],     [[2,1,3,1],     [2,1],         [3,1]],                         300).
instance(mb22b,5, [1000, 250, 250, 250], [2,2,2],   [[2,1,3,1,4,1], [2,1],         [3,1],         [4,1]],          625).
instance(mc22b,5, [1000, 250, 500,1000], [1,5,3],   [[3,1,[2,4],1], [4,1],         [2,1],         [3,1]],          400).
instance(ma23b,5, [1000, 250, 500],      [6,5],     [[2,1,3,1],     [3,1],         [2,1]],                         249).
instance(mb23b,5, [1000, 500,1000],      [6,7],     [[2,1,3,1],     [[2,3],1],     [2,1,3,1]],                     344).
instance(mc23b,5, [1000, 250,1000],      [8,5],     [[2,1,3,1],     [3,1],         [2,1]],                         250).
instance(md23b,5, [ 500, 500, 500, 500], [2,1,4],   [[2,1,3,1,4,1], [[3,4],1],     [4,1,[2,3],1], [[2,4],1]],      495).
instance(ma24b,5, [1000, 250,1000],      [2,1],     [[2,1,3,1],     [3,1],         [2,1]],                        1000).
instance(mb24b,5, [ 500,1000,1000],      [2,2],     [[2,1,3,1],     [2,1,3,1],     [2,1,3,1]],                    1250).
instance(ma6c, 5, [1000, 500,1000],      [3,1],     [[[2,3],1],     [3,1],         [2,1]],                         624).
instance(ma7c, 5, [1000, 250, 500],      [12,3],    [[[2,3],1],     [3,1],         [2,1]],                         116).
instance(ma8c, 5, [1000, 250, 500],      [2,8],     [[[2,3],1],     [3,1],         [2,1]],                         154).
instance(ma12c,5, [1000, 500,1000],      [3,2],     [[2,1,3,1],     [3,1],         [2,1]],                         666).
instance(mb12c,5, [1000, 250,1000,1000], [2,1,2],   [[2,1,3,1,4,1], [3,1],         [2,1],         [4,1]],         1000).
instance(ma13c,5, [ 250, 250, 250],      [2,1],     [[[2,3],1],     [2,1],         [3,1]],                         247).
instance(mb13c,5, [1000, 250,1000,1000], [1,4,6],   [[3,1,[2,4],1], [[3,4],1],     [4,1,[2,3],1], [3,1,[2,4],1]],  534).
instance(ma14c,5, [1000, 500, 500],      [8,8],     [[2,1,3,1],     [2,1],         [3,1]],                         187).
instance(mb14c,5, [1000, 250, 500,1000], [4,4,6],   [[2,1,3,1,4,1], [2,1],         [3,1],         [4,1]],          312).
instance(mb22c,5, [1000, 500,1000],      [7,6],     [[2,1,3,1],     [[2,3],1],     [2,1,3,1]],                     344).
instance(mc22c,5, [ 500, 250, 250],      [2,2],     [[2,1,3,1],     [2,1],         [3,1]],                         375).
instance(mc22d,5, [1000, 250, 500, 500], [3,3,3],   [[2,1,3,1,4,1], [2,1],         [3,1],         [4,1]],          416).
instance(mb23c,5, [1000, 500, 500],      [6,6],     [[2,1,3,1],     [2,1],         [3,1]],                         249).
instance(mc23c,5, [1000, 250, 500],      [7,1],     [[[2,3],1],     [3,1],         [2,1]],                         213).
instance(md23c,5, [1000, 250, 500, 500], [3,3,3],   [[2,1,3,1,4,1], [3,1],         [2,1],         [4,1]],          416).
instance(ma7d, 5, [1000, 250,1000],      [6,9],     [[2,1,3,1],     [2,1],         [3,1]],                         207).
instance(ma8d, 5, [ 500, 500, 500],      [6,2],     [[2,1,3,1],     [[2,3],1],     [[2,3],1]],                     245).
instance(ma13d,5, [1000, 500, 500],      [6,5],     [[2,1,3,1],     [2,1],         [3,1]],                         249).
instance(mb13d,5, [1000, 250, 500, 500], [3,4,4],   [[2,1,3,1,4,1], [2,1],         [3,1],         [4,1]],          375).
instance(ma14d,5, [1000, 250, 500],      [6,6],     [[2,1,3,1],     [2,1],         [3,1]],                         207).
instance(mb14d,5, [1000, 250, 500, 500], [4,3,1],   [[2,1,[3,4],1], [4,1],         [2,1],         [3,1]],          375).
instance(mb21d,5, [1000, 500, 500,1000], [2,1,2],   [[2,1,3,1,4,1], [[2,3],1],     [[2,3],1],     [4,1]],          994).
instance(mc21d,5, [1000, 250, 500, 500], [2,1,1],   [[2,1,3,1,4,1], [3,1],         [[2,4],1],     [[2,4],1]],      994).
instance(ma22d,5, [1000, 250,1000],      [6,6],     [[2,1,3,1],     [[2,3],1],     [2,1,3,1]],                     352).
instance(mb22d,5, [1000, 250, 500],      [4,4],     [[2,1,3,1],     [3,1],         [2,1]],                         312).
instance(md22d,5, [ 500, 250, 250, 500], [2,1,2],   [[2,1,3,1,4,1], [[2,3],1],     [[2,3],1],     [4,1]],          494).
instance(ma23d,5, [ 500,1000,1000],      [7,7],     [[2,1,3,1],     [2,1,3,1],     [2,1,3,1]],                     355).
instance(mb23d,5, [1000, 250, 250,1000], [2,6,2],   [[3,1,[2,4],1], [2,1],         [4,1],         [3,1]],          332).
instance(mc23d,5, [1000, 250, 500,1000], [1,6,4],   [[3,1,[2,4],1], [2,1],         [4,1],         [3,1]],          332).
instance(ma25d,5, [1000, 500, 500,1000], [2,1,1],   [[2,1,[3,4],1], [3,1],         [4,1],         [2,1]],         1000).
instance(mb21c,5, [1000, 500, 500, 500], [2,1,1],   [[2,1,3,1,4,1], [[2,3],1],     [2,1,[3,4],1], [[2,4],1]],     1244).
instance(mc21c,5, [1000, 500, 500, 500], [1,1,2],   [[2,1,3,1,4,1], [[2,4],1],     [4,1,[2,3],1], [[3,4],1]],     1244).
instance(ma25b,5, [1000,1000,1000,1000], [2,2,1],   [[2,1,3,1,4,1], [2,1,[3,4],1], [3,1,[2,4],1], [2,1,3,1,4,1]], 1997).
)PL";

}  // namespace synprod::hdp
