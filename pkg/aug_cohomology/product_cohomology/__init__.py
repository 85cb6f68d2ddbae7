# Ficheiro intencionalmente vazio.
# Transforma 'product_cohomology' num sub-pacote de 'aug_cohomology'.
