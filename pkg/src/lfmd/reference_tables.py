"""Bound tables exactly as printed, one tuple of cell strings per row."""

T2 = [
    ('8.', '1.14286', '2', '1.94118', '2', '1.4'),
    ('9.', '1.125', '2', '1.94737', '2', '1.39286'),
    ('10.', '1.11111', '2', '1.95238', '2', '1.3871'),
    ('11.', '1.1', '2', '1.95652', '2', '1.38235'),
    ('12.', '1.09091', '2', '1.96', '2', '1.37838'),
    ('13.', '1.08333', '2', '1.96296', '2', '1.375'),
    ('14.', '1.07692', '2', '1.96552', '2', '1.37209'),
    ('15.', '1.07143', '2', '1.96774', '2', '1.36957'),
    ('16.', '1.06667', '2', '1.9697', '2', '1.36735'),
    ('17.', '1.0625', '2', '1.97143', '2', '1.36538'),
    ('18.', '1.05882', '2', '1.97297', '2', '1.36364'),
    ('19.', '1.05556', '2', '1.97436', '2', '1.36207'),
    ('20.', '1.05263', '2', '1.97561', '2', '1.36066'),
]

TT2 = [
    ('8.', '1.06667', '1.13333', '1.03125', '1', '1.02941'),
    ('9.', '1.05882', '1.11765', '1.02778', '1', '1.02632'),
    ('10.', '1.05263', '1.10526', '1.025', '1', '1.02381'),
    ('11.', '1.04762', '1.09524', '1.02273', '1', '1.02174'),
    ('12.', '1.04348', '1.08696', '1.02083', '1', '1.02'),
    ('13.', '1.04', '1.08', '1.01923', '1', '1.01852'),
    ('14.', '1.03704', '1.07407', '1.01786', '1', '1.01724'),
    ('15.', '1.03448', '1.06897', '1.01667', '1', '1.01613'),
    ('16.', '1.03226', '1.06452', '1.01563', '1', '1.01515'),
    ('17.', '1.0303', '1.06061', '1.01471', '1', '1.01429'),
    ('18.', '1.02857', '1.05714', '1.01389', '1', '1.01351'),
    ('19.', '1.02703', '1.05405', '1.01316', '1', '1.01282'),
    ('20.', '1.02564', '1.05128', '1.0125', '1', '1.0122'),
]

T3 = [
    ('4.', '2.', '7.5', '40.'),
    ('5.', '4.', '15.5', '121.'),
    ('6.', '8.', '31.5', '364.'),
    ('7.', '16.', '63.5', '1093.'),
    ('8.', '32.', '127.5', '3280.'),
    ('9.', '64.', '255.5', '9841.'),
    ('10.', '128.', '511.5', '29,524.'),
    ('11.', '256.', '1023.5', '88,573.'),
    ('12.', '512.', '2047.5', '265,720.'),
    ('13.', '1024.', '4095.5', '797,161.'),
    ('14.', '2048.', '8191.5', '2.39148×10^6'),
    ('15.', '4096.', '16,383.5', '7.17445×10^6'),
    ('16.', '8192.', '32,767.5', '2.15234×10^7'),
    ('17.', '16,384.', '65,535.5', '6.45701×10^7'),
    ('18.', '32,768.', '131,072.', '1.9371×10^8'),
    ('19.', '65,536.', '262,144.', '5.81131×10^8'),
    ('20.', '131,072.', '524,288.', '1.74339×10^9'),
]

T4 = [
    ('4.', '1.14286', '1.66667', '2.85714'),
    ('5.', '1.06667', '1.82353', '2.95122'),
    ('6.', '1.03226', '1.90909', '2.98361'),
    ('7.', '1.01587', '1.95385', '2.99452'),
    ('8.', '1.00787', '1.97674', '2.99817'),
    ('9.', '1.00392', '1.98833', '2.99939'),
    ('10.', '1.00196', '1.99415', '2.9998'),
    ('11.', '1.00098', '1.99707', '2.99993'),
    ('12.', '1.00049', '1.99854', '2.99998'),
    ('13.', '1.00024', '1.99927', '2.99999'),
    ('14.', '1.00012', '1.99963', '3.'),
    ('15.', '1.00006', '1.99982', '3.'),
    ('16.', '1.00003', '1.99991', '3.'),
    ('17.', '1.00002', '1.99995', '3.'),
    ('18.', '1.00001', '1.99998', '3.'),
    ('19.', '1.', '1.99999', '3.'),
    ('20.', '1.', '1.99999', '3.'),
]

