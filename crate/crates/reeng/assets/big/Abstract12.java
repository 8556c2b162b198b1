public abstract class Abstract12 extends State {
}
