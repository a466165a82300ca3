namespace bessel4 {}
