gmc = "0.1.0"
model_format = "gmcmodel/1"
