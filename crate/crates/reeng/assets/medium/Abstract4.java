public abstract class Abstract4 extends Abstract1 {
}
