from ordspeed.speeds.dto.regime import RegimeCase
