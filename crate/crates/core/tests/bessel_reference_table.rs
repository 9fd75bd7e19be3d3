const JY_REFS: &[(f64, f64, f64, f64)] = &[
    (0.0, 0.5, 0.93846980724081286, -0.44451873350670656),
    (0.0, 2.2999999999999998, 0.055539784445602057, 0.51807539620762211),
    (0.0, 9.6999999999999993, -0.22179548203172286, 0.12787479202418628),
    (0.0, 380.0, -0.024847409550482934, 0.032525681835286736),
    (0.33333333333333331, 0.5, 0.67283082949794604, -0.84062782604337771),
    (0.33333333333333331, 2.2999999999999998, 0.29887587878621658, 0.42952164716940106),
    (0.33333333333333331, 9.6999999999999993, -0.12944106839202102, 0.22097117376000505),
    (0.33333333333333331, 380.0, -0.0052615823749054703, 0.040591010527875976),
    (0.5, 0.5, 0.54097378993452805, -0.99024588024340487),
    (0.5, 2.2999999999999998, 0.3923225958912277, 0.35053414402933386),
    (0.5, 9.6999999999999993, -0.069621075712655023, 0.24654372874685873),
    (0.5, 380.0, 0.0054160154656292718, 0.040570703308139333),
    (1.0, 0.5, 0.2422684576748739, -1.4714723926702431),
    (1.0, 2.2999999999999998, 0.53987253260431367, 0.052277315844224723),
    (1.0, 9.6999999999999993, 0.11663864790021317, 0.22866002977606234),
    (1.0, 380.0, 0.032493016087537095, 0.024890227935124864),
    (2.7000000000000002, 0.5, 0.0055832207765174474, -21.560263807780075),
    (2.7000000000000002, 2.2999999999999998, 0.2409877549596075, -0.74081393057507749),
    (2.7000000000000002, 9.6999999999999993, 0.083179861681605877, -0.24752140045554957),
    (2.7000000000000002, 380.0, -0.017345514790845517, -0.037074103453203819),
    (5.0, 0.5, 8.0536272413574736e-06, -7946.3014788074734),
    (5.0, 2.2999999999999998, 0.013397290546977556, -5.4143237037331184),
    (5.0, 9.6999999999999993, -0.19528368845825528, 0.19489640765694746),
    (5.0, 2.5, 0.019501625134503219, -3.8301760007407517),
    (5.0, 5.0999999999999996, 0.2740038554704588, -0.42776888131447899),
    (5.0, 7.5, 0.28347390516255044, 0.17541805694546511),
    (5.0, 380.0, 0.031692247086014452, 0.025904830739272661),
    (17.25, 0.5, 5.6281189202564108e-26, -3.2800532509737419e+23),
    (17.25, 2.2999999999999998, 1.4219761303112915e-14, -1309416026519.6392),
    (17.25, 9.6999999999999993, 0.00024329051666259797, -91.895232044992497),
    (17.25, 8.625, 4.2787299215477362e-05, -498.52755706032514),
    (17.25, 17.350000000000001, 0.17899763222200402, -0.28895264654270586),
    (17.25, 25.875, -0.12165767214498688, -0.13459103021174104),
    (17.25, 380.0, 0.032569877245388838, 0.024824295202486708),
    (60.5, 0.5, 5.7940112715730248e-120, -9.0809284313206002e+116),
    (60.5, 2.2999999999999998, 7.0946145967542858e-80, -7.4213017640962978e+76),
    (60.5, 9.6999999999999993, 3.2270385245658075e-42, -1.6517610664693126e+39),
    (60.5, 30.25, 7.7956138459274874e-14, -77938356048.448074),
    (60.5, 60.600000000000001, 0.11656199090132673, -0.1926857206178601),
    (60.5, 90.75, -0.093773445990009946, -0.024818858792977998),
    (60.5, 380.0, 0.041186662969446189, -0.00078584579836251192),
    (120.25, 60.125, 1.1015675171837618e-25, -2.7748067999401355e+22),
    (120.25, 120.34999999999999, 0.092292572838128417, -0.15402294381796466),
    (120.25, 180.375, 0.031114985239177873, 0.061374114909546584),
    (120.25, 380.0, -0.023735421635494369, 0.034679971334574594),
    (250.75, 250.84999999999999, 0.071961407947798969, -0.12106441718961777),
    (250.75, 376.125, 0.042858526496551037, -0.020831271414286492),
    (250.75, 380.0, -0.036297654276296547, 0.030200967633452439),
    (399.5, 399.60000000000002, 0.061488225199139213, -0.10387820448916112),
    (399.5, 599.25, -0.037585927756661849, 0.0035491856149321068),
    (399.5, 380.0, 0.00055563733706711239, -4.6677599341536027),
    (40.5, 10.0, 2.1284317445986989e-21, -3.8106994588796534e+18),
    (80.25, 30.0, 6.7005794966017855e-27, -6.3824599155942885e+23),
];
